/** DOM wiring for the simulator.
 *
 * Immediate-mode rendering: every state change redraws the SVG canvas and
 * the side panels from scratch. Rechecks are debounced while editing, with
 * at most one certify request in flight; a newer request aborts the older.
 */

import { ApiClient, ApiError } from "./api.js";
import { exportGame, exportPartition, importGame, toCanonicalText } from "./documents.js";
import { badgesFrom, whatIfMoves } from "./inspect.js";
import {
  addPlayer,
  assignToBucket,
  bucketOf,
  edgePairs,
  movePlayer,
  removePlayer,
  setAllModels,
  setModel,
  toggleEdge,
  withReport,
  type EditorState,
  emptyState,
} from "./state.js";
import { MODEL_TAGS, type ModelTag } from "./types.js";

const RECHECK_DEBOUNCE_MS = 450;
const BUCKET_COLORS = [
  "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
  "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac",
];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

let state: EditorState = emptyState();
let selected: string | null = null;
let highlight: string[] = [];
let autoCheck = true;
let debounceTimer: number | undefined;
let inFlight: AbortController | null = null;
let dragging: { label: string; moved: boolean } | null = null;

const svg = el<HTMLElement>("canvas") as unknown as SVGSVGElement;
const api = () => new ApiClient((el<HTMLInputElement>("service-url")).value);

function banner(message: string, kind: "error" | "ok" | "none"): void {
  const node = el<HTMLDivElement>("banner");
  node.textContent = message;
  node.className = kind === "none" ? "hidden" : kind;
}

function update(next: EditorState): void {
  state = next;
  if (selected && !state.players.includes(selected)) selected = null;
  highlight = [];
  render();
  if (state.dirty && autoCheck && state.players.length > 0) {
    window.clearTimeout(debounceTimer);
    debounceTimer = window.setTimeout(() => void recheck(), RECHECK_DEBOUNCE_MS);
  }
}

async function recheck(): Promise<void> {
  if (state.players.length === 0) return;
  inFlight?.abort();
  const controller = new AbortController();
  inFlight = controller;
  banner("checking…", "ok");
  try {
    const report = await api().certify(
      exportGame(state),
      exportPartition(state),
      undefined,
      controller.signal,
    );
    if (controller !== inFlight) return; // a newer request superseded this one
    state = withReport(state, report);
    banner("", "none");
    render();
    void refreshInspector();
  } catch (err) {
    if (controller.signal.aborted) return;
    const reason = err instanceof ApiError ? err.message : "service unreachable";
    banner(`check failed: ${reason} (badges are stale)`, "error");
  }
}

async function refreshInspector(): Promise<void> {
  const panel = el<HTMLDivElement>("inspector");
  if (!selected) {
    panel.innerHTML = "<p class=dim>select a player to inspect utilities</p>";
    return;
  }
  const player = selected;
  try {
    const game = exportGame(state);
    const current = await api().evaluate(game, exportPartition(state));
    const row = current.rows.find((r) => r.player === player);
    const lines = [
      `<h3>player ${player}</h3>`,
      `<p>model: <b>${state.models[player]}</b></p>`,
      `<p>current {${state.buckets[bucketOf(state, player)]!.join(", ")}}: <b>${row?.utility}</b></p>`,
    ];
    const moves = whatIfMoves(state, player);
    if (moves.length) lines.push("<p>what if " + player + " were to…</p><ul>");
    for (const move of moves) {
      const answer = await api().evaluate(game, move.partition);
      const utility = answer.rows.find((r) => r.player === player)?.utility ?? "?";
      lines.push(`<li>${move.description}: <b>${utility}</b></li>`);
    }
    if (moves.length) lines.push("</ul>");
    if (selected === player) panel.innerHTML = lines.join("");
  } catch {
    panel.innerHTML = "<p class=dim>utilities unavailable (service unreachable)</p>";
  }
}

function render(): void {
  renderCanvas();
  renderBuckets();
  renderBadges();
  renderModelPanel();
  el<HTMLSpanElement>("status").textContent = state.dirty
    ? "edited since last check"
    : state.lastReport
      ? "verdicts current"
      : "";
}

function renderCanvas(): void {
  const width = svg.clientWidth || 640;
  const height = svg.clientHeight || 480;
  const parts: string[] = [];
  for (const [a, b] of edgePairs(state)) {
    const p = state.positions[a]!;
    const q = state.positions[b]!;
    parts.push(
      `<line x1="${p.x}" y1="${p.y}" x2="${q.x}" y2="${q.y}" class="edge" data-edge="${a}|${b}"/>`,
    );
  }
  for (const label of state.players) {
    const p = state.positions[label]!;
    const color = BUCKET_COLORS[bucketOf(state, label) % BUCKET_COLORS.length];
    const classes = ["node"];
    if (label === selected) classes.push("selected");
    if (highlight.includes(label)) classes.push("witness");
    parts.push(
      `<g class="${classes.join(" ")}" data-player="${label}" transform="translate(${p.x},${p.y})">` +
        `<circle r="18" fill="${color}"/>` +
        `<text dy="5">${label}</text></g>`,
    );
  }
  svg.innerHTML = parts.join("");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
}

function renderBuckets(): void {
  const box = el<HTMLDivElement>("buckets");
  box.innerHTML = "";
  state.buckets.forEach((bucket, index) => {
    const chip = document.createElement("div");
    chip.className = "bucket";
    chip.style.borderColor = BUCKET_COLORS[index % BUCKET_COLORS.length]!;
    chip.textContent = `{${bucket.join(", ")}}`;
    chip.title = selected ? `put ${selected} here` : "select a player first";
    chip.onclick = () => {
      if (selected) update(assignToBucket(state, selected, index));
    };
    box.appendChild(chip);
  });
  const fresh = document.createElement("div");
  fresh.className = "bucket new";
  fresh.textContent = "+ new group";
  fresh.onclick = () => {
    if (selected) update(assignToBucket(state, selected, -1));
  };
  box.appendChild(fresh);
}

function renderBadges(): void {
  const box = el<HTMLDivElement>("badges");
  box.innerHTML = "";
  if (!state.lastReport) return;
  for (const badge of badgesFrom(state.lastReport)) {
    const node = document.createElement("div");
    node.className = `badge ${badge.stable ? "stable" : "unstable"} ${state.dirty ? "stale" : ""}`;
    const aux = badge.auxiliary ? " *" : "";
    node.innerHTML = `<b>${badge.notion}${aux}</b> ${badge.stable ? "stable" : "unstable"}` +
      (badge.witness ? `<br><small>${badge.witness}</small>` : "");
    node.onclick = () => {
      highlight = badge.highlight;
      renderCanvas();
    };
    box.appendChild(node);
  }
  const note = document.createElement("p");
  note.className = "dim";
  note.textContent = "* auxiliary notion (standard-literature plumbing, not the core)";
  box.appendChild(note);
}

function renderModelPanel(): void {
  const box = el<HTMLDivElement>("model-panel");
  box.innerHTML = "";
  if (!selected) return;
  const pick = document.createElement("select");
  for (const tag of MODEL_TAGS) {
    const option = document.createElement("option");
    option.value = tag;
    option.textContent = tag;
    option.selected = state.models[selected] === tag;
    pick.appendChild(option);
  }
  pick.onchange = () => update(setModel(state, selected!, pick.value as ModelTag));
  const label = document.createElement("label");
  label.textContent = `model for ${selected}: `;
  label.appendChild(pick);
  box.appendChild(label);

  const remove = document.createElement("button");
  remove.textContent = `remove ${selected}`;
  remove.onclick = () => update(removePlayer(state, selected!));
  box.appendChild(remove);
}

function canvasPoint(event: MouseEvent): { x: number; y: number } {
  const rect = svg.getBoundingClientRect();
  return { x: Math.round(event.clientX - rect.left), y: Math.round(event.clientY - rect.top) };
}

function playerAt(event: MouseEvent): string | null {
  const target = event.target as Element | null;
  const group = target?.closest("[data-player]");
  return group?.getAttribute("data-player") ?? null;
}

function wireCanvas(): void {
  svg.addEventListener("mousedown", (event) => {
    const label = playerAt(event);
    if (label) dragging = { label, moved: false };
  });
  svg.addEventListener("mousemove", (event) => {
    if (!dragging) return;
    dragging.moved = true;
    state = movePlayer(state, dragging.label, canvasPoint(event));
    renderCanvas();
  });
  svg.addEventListener("mouseup", (event) => {
    const wasDragging = dragging;
    dragging = null;
    const label = playerAt(event);
    if (wasDragging?.moved) return;
    if (label) {
      if (event.shiftKey && selected && selected !== label) {
        update(toggleEdge(state, selected, label));
      } else {
        selected = selected === label ? null : label;
        highlight = [];
        render();
        void refreshInspector();
      }
      return;
    }
    update(addPlayer(state, canvasPoint(event)));
  });
}

function download(name: string, text: string): void {
  const link = document.createElement("a");
  link.href = URL.createObjectURL(new Blob([text], { type: "application/json" }));
  link.download = name;
  link.click();
  URL.revokeObjectURL(link.href);
}

function wireControls(): void {
  el<HTMLButtonElement>("check-now").onclick = () => void recheck();
  const auto = el<HTMLInputElement>("auto-check");
  auto.onchange = () => {
    autoCheck = auto.checked;
  };
  el<HTMLButtonElement>("set-all-models").onclick = () => {
    const tag = el<HTMLSelectElement>("global-model").value as ModelTag;
    update(setAllModels(state, tag));
  };
  const globalPick = el<HTMLSelectElement>("global-model");
  for (const tag of MODEL_TAGS) {
    const option = document.createElement("option");
    option.value = tag;
    option.textContent = tag;
    globalPick.appendChild(option);
  }
  el<HTMLButtonElement>("export-game").onclick = () =>
    download("drawn.game", toCanonicalText(exportGame(state)));
  el<HTMLButtonElement>("export-partition").onclick = () =>
    download("drawn.partition", toCanonicalText(exportPartition(state)));
  el<HTMLButtonElement>("load-story").onclick = async () => {
    try {
      const examples = await api().examples();
      const story = examples.find((e) => e.name === "story") ?? examples[0];
      if (!story) return;
      const rect = svg.getBoundingClientRect();
      update(importGame(story.game, { width: rect.width || 640, height: rect.height || 480 }));
      banner(`loaded example "${story.name}"`, "ok");
    } catch {
      banner("could not load examples: service unreachable", "error");
    }
  };
  const fileInput = el<HTMLInputElement>("import-file");
  fileInput.onchange = async () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    try {
      const doc = JSON.parse(await file.text());
      const rect = svg.getBoundingClientRect();
      update(importGame(doc, { width: rect.width || 640, height: rect.height || 480 }));
    } catch (err) {
      banner(`import failed: ${err instanceof Error ? err.message : err}`, "error");
    }
    fileInput.value = "";
  };
}

function main(): void {
  wireCanvas();
  wireControls();
  render();
  banner("click the canvas to add players; shift-click a second player to toggle a friendship", "ok");
}

main();
