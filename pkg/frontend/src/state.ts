/** Editor state and its pure transition functions.
 *
 * The state always mirrors a valid game document plus a valid partition
 * document: labels are unique, edges join existing distinct players, every
 * player sits in exactly one nonempty bucket. All math stays server-side;
 * this module only moves labels around.
 */

import type { CertifyResponse, ModelTag } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface EditorState {
  /** Insertion order fixes the player index order used for canonical exports. */
  players: string[];
  positions: Record<string, Point>;
  /** Canonical keys "a|b" with the index-smaller label first. */
  edges: string[];
  /** Disjoint nonempty buckets covering all players. */
  buckets: string[][];
  models: Record<string, ModelTag>;
  lastReport: CertifyResponse | null;
  /** True when the state changed since lastReport was computed. */
  dirty: boolean;
}

export const DEFAULT_MODEL: ModelTag = "friend-oriented";

export function emptyState(): EditorState {
  return {
    players: [],
    positions: {},
    edges: [],
    buckets: [],
    models: {},
    lastReport: null,
    dirty: false,
  };
}

export function playerIndex(state: EditorState, label: string): number {
  const index = state.players.indexOf(label);
  if (index < 0) throw new Error(`no player named ${label}`);
  return index;
}

export function edgeKey(state: EditorState, a: string, b: string): string {
  const [i, j] = [playerIndex(state, a), playerIndex(state, b)];
  if (i === j) throw new Error("a player cannot befriend themselves");
  return i < j ? `${a}|${b}` : `${b}|${a}`;
}

export function hasEdge(state: EditorState, a: string, b: string): boolean {
  return state.edges.includes(edgeKey(state, a, b));
}

export function edgePairs(state: EditorState): [string, string][] {
  return state.edges.map((key) => key.split("|") as [string, string]);
}

export function bucketOf(state: EditorState, label: string): number {
  const index = state.buckets.findIndex((bucket) => bucket.includes(label));
  if (index < 0) throw new Error(`player ${label} is in no bucket`);
  return index;
}

function nextFreeLabel(state: EditorState): string {
  for (let i = 0; i < 26; i++) {
    const label = String.fromCharCode(97 + i);
    if (!state.players.includes(label)) return label;
  }
  throw new Error("the editor supports at most 26 players");
}

function touched(state: EditorState): EditorState {
  return { ...state, dirty: true };
}

/** Add a player; a fresh singleton bucket keeps the partition invariant. */
export function addPlayer(
  state: EditorState,
  position: Point,
  label?: string,
  model?: ModelTag,
): EditorState {
  const name = label ?? nextFreeLabel(state);
  if (state.players.includes(name)) throw new Error(`player ${name} already exists`);
  if (!name) throw new Error("player labels must be nonempty");
  return touched({
    ...state,
    players: [...state.players, name],
    positions: { ...state.positions, [name]: position },
    buckets: [...state.buckets, [name]],
    models: { ...state.models, [name]: model ?? DEFAULT_MODEL },
  });
}

/** Remove a player, their incident edges, and their bucket seat; a bucket
 * left empty disappears rather than lingering invisibly. */
export function removePlayer(state: EditorState, label: string): EditorState {
  playerIndex(state, label);
  const positions = { ...state.positions };
  delete positions[label];
  const models = { ...state.models };
  delete models[label];
  return touched({
    ...state,
    players: state.players.filter((p) => p !== label),
    positions,
    edges: state.edges.filter((key) => !key.split("|").includes(label)),
    buckets: state.buckets
      .map((bucket) => bucket.filter((p) => p !== label))
      .filter((bucket) => bucket.length > 0),
    models,
  });
}

export function toggleEdge(state: EditorState, a: string, b: string): EditorState {
  const key = edgeKey(state, a, b);
  const edges = state.edges.includes(key)
    ? state.edges.filter((k) => k !== key)
    : [...state.edges, key];
  return touched({ ...state, edges });
}

/** Layout only; verdicts do not depend on where a node is drawn. */
export function movePlayer(state: EditorState, label: string, position: Point): EditorState {
  playerIndex(state, label);
  return { ...state, positions: { ...state.positions, [label]: position } };
}

/** Move a player into an existing bucket, or a fresh one with target -1. */
export function assignToBucket(state: EditorState, label: string, target: number): EditorState {
  const from = bucketOf(state, label);
  if (target === from) return state;
  if (target >= state.buckets.length || target < -1) {
    throw new Error(`no bucket ${target}`);
  }
  let buckets = state.buckets.map((bucket, k) =>
    k === from ? bucket.filter((p) => p !== label) : bucket,
  );
  if (target === -1) {
    buckets.push([label]);
  } else {
    buckets = buckets.map((bucket, k) => (k === target ? [...bucket, label] : bucket));
  }
  return touched({ ...state, buckets: buckets.filter((bucket) => bucket.length > 0) });
}

export function setModel(state: EditorState, label: string, model: ModelTag): EditorState {
  playerIndex(state, label);
  return touched({ ...state, models: { ...state.models, [label]: model } });
}

export function setAllModels(state: EditorState, model: ModelTag): EditorState {
  const models: Record<string, ModelTag> = {};
  for (const p of state.players) models[p] = model;
  return touched({ ...state, models });
}

export function withReport(state: EditorState, report: CertifyResponse): EditorState {
  return { ...state, lastReport: report, dirty: false };
}

/** Cheap structural audit used by tests and before every export. */
export function assertInvariants(state: EditorState): void {
  const seen = new Set<string>();
  for (const p of state.players) {
    if (seen.has(p)) throw new Error(`duplicate player ${p}`);
    seen.add(p);
    if (!(p in state.positions)) throw new Error(`player ${p} has no position`);
    if (!(p in state.models)) throw new Error(`player ${p} has no model`);
  }
  for (const key of state.edges) {
    const [a, b] = key.split("|");
    if (a === undefined || b === undefined || a === b) throw new Error(`bad edge ${key}`);
    playerIndex(state, a);
    playerIndex(state, b);
  }
  const seated = new Set<string>();
  for (const bucket of state.buckets) {
    if (bucket.length === 0) throw new Error("empty bucket");
    for (const p of bucket) {
      playerIndex(state, p);
      if (seated.has(p)) throw new Error(`player ${p} in two buckets`);
      seated.add(p);
    }
  }
  if (seated.size !== state.players.length) throw new Error("player missing from buckets");
}
