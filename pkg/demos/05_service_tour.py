"""Walk the HTTP API end to end without leaving the process.

The service is stateless: the game travels in every request, so these are
exactly the payloads a browser client sends. Run the real thing with
``hedonic serve --port 8080``.
"""

import json

from fastapi.testclient import TestClient

from hedonic.service import create_app

client = TestClient(create_app())

print("GET /api/health")
print(json.dumps(client.get("/api/health").json(), indent=2))

story = next(
    e["game"] for e in client.get("/api/examples").json()["examples"] if e["name"] == "story"
)
singletons = {"format": "hedonic-partition/1", "blocks": [[p] for p in story["players"]]}

print()
print("POST /api/blocking with the story game, everyone alone:")
body = client.post("/api/blocking", json={"game": story, "partition": singletons}).json()
print("  first blocking coalition:", body["blocking_coalition"])

print()
print("POST /api/certify on the same partition:")
report = client.post(
    "/api/certify", json={"game": story, "partition": singletons, "notions": ["core", "nash"]}
).json()
for notion, verdict in report["verdicts"].items():
    print(f"  {notion}: {'stable' if verdict['stable'] else 'unstable'}"
          + (f" (witness {verdict['witness']})" if verdict["witness"] else ""))

print()
print("POST /api/core lists every core-stable partition:")
core = client.post("/api/core", json={"game": story}).json()
for blocks in core["core"]:
    print("  " + " | ".join("{" + ", ".join(b) + "}" for b in blocks))
