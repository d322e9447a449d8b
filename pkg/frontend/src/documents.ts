/** Export and import between editor state and the engine's documents.
 *
 * Exports are canonical: edges sorted by index pairs, partition blocks by
 * least member, homogeneous models collapsed to one tag, text rendered the
 * way the engine itself normalizes documents. So an export survives
 * parse -> serialize on the server with zero diffs.
 */

import {
  GAME_FORMAT,
  PARTITION_FORMAT,
  MODEL_TAGS,
  type GameDocument,
  type ModelTag,
  type PartitionDocument,
} from "./types.js";
import {
  addPlayer,
  assertInvariants,
  edgePairs,
  emptyState,
  playerIndex,
  toggleEdge,
  type EditorState,
  type Point,
} from "./state.js";

export function exportGame(state: EditorState): GameDocument {
  assertInvariants(state);
  if (state.players.length === 0) throw new Error("a game needs at least one player");
  const edges = edgePairs(state)
    .map(([a, b]) => {
      const [i, j] = [playerIndex(state, a), playerIndex(state, b)];
      return i < j ? { i, j, pair: [a, b] as [string, string] } : { i: j, j: i, pair: [b, a] as [string, string] };
    })
    .sort((p, q) => p.i - q.i || p.j - q.j)
    .map((e) => e.pair);

  const tags = state.players.map((p) => state.models[p] as ModelTag);
  const homogeneous = tags.every((t) => t === tags[0]);
  const doc: GameDocument = {
    format: GAME_FORMAT,
    players: [...state.players],
    edges,
    model: homogeneous
      ? (tags[0] as ModelTag)
      : Object.fromEntries(state.players.map((p, k) => [p, tags[k] as ModelTag])),
  };

  // fractional players need a valuation matrix; the editor derives the
  // simple symmetric one from the drawn graph (1 per friendship)
  if (tags.includes("fractional")) {
    const friends = new Set(state.edges);
    const valuations: Record<string, Record<string, string>> = {};
    for (const p of state.players) {
      const row: Record<string, string> = {};
      for (const q of state.players) {
        const key =
          playerIndex(state, p) < playerIndex(state, q) ? `${p}|${q}` : `${q}|${p}`;
        row[q] = p !== q && friends.has(key) ? "1" : "0";
      }
      valuations[p] = row;
    }
    doc.valuations = valuations;
    doc.aggregation = "mean";
  }
  return doc;
}

export function exportPartition(state: EditorState): PartitionDocument {
  assertInvariants(state);
  const blocks = state.buckets
    .map((bucket) => [...bucket].sort((a, b) => playerIndex(state, a) - playerIndex(state, b)))
    .sort((x, y) => playerIndex(state, x[0] as string) - playerIndex(state, y[0] as string));
  return { format: PARTITION_FORMAT, blocks };
}

/** Canonical text form; matches the engine's own serialization byte for byte. */
export function toCanonicalText(doc: GameDocument | PartitionDocument): string {
  return JSON.stringify(doc, null, 2) + "\n";
}

function isModelTag(value: unknown): value is ModelTag {
  return typeof value === "string" && (MODEL_TAGS as readonly string[]).includes(value);
}

/** Rebuild editor state from documents; players land on a circle layout. */
export function importGame(
  doc: GameDocument,
  canvas: { width: number; height: number },
  partition?: PartitionDocument,
): EditorState {
  if (doc.format !== GAME_FORMAT) throw new Error(`unsupported game format ${doc.format}`);
  let state = emptyState();
  const n = doc.players.length;
  doc.players.forEach((label, k) => {
    const angle = (2 * Math.PI * k) / Math.max(n, 1) - Math.PI / 2;
    const radius = 0.38 * Math.min(canvas.width, canvas.height);
    const position: Point = {
      x: Math.round(canvas.width / 2 + radius * Math.cos(angle)),
      y: Math.round(canvas.height / 2 + radius * Math.sin(angle)),
    };
    const model = typeof doc.model === "string" ? doc.model : doc.model[label];
    if (!isModelTag(model)) throw new Error(`player ${label} has no usable model tag`);
    state = addPlayer(state, position, label, model);
  });
  for (const [a, b] of doc.edges) {
    state = toggleEdge(state, a, b);
  }
  if (partition) {
    state = applyPartition(state, partition);
  }
  return { ...state, dirty: true, lastReport: null };
}

export function applyPartition(state: EditorState, doc: PartitionDocument): EditorState {
  if (doc.format !== PARTITION_FORMAT) {
    throw new Error(`unsupported partition format ${doc.format}`);
  }
  const seen = new Set<string>();
  for (const block of doc.blocks) {
    if (block.length === 0) throw new Error("empty block");
    for (const p of block) {
      playerIndex(state, p);
      if (seen.has(p)) throw new Error(`player ${p} appears twice`);
      seen.add(p);
    }
  }
  if (seen.size !== state.players.length) throw new Error("partition misses players");
  const next = { ...state, buckets: doc.blocks.map((b) => [...b]), dirty: true };
  assertInvariants(next);
  return next;
}
