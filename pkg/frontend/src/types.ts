/** Wire types mirroring the engine's JSON documents and API responses. */

export const GAME_FORMAT = "hedonic-game/1";
export const PARTITION_FORMAT = "hedonic-partition/1";

export const MODEL_TAGS = [
  "friend-oriented",
  "enemy-oriented",
  "fractional",
  "selfish-first",
  "equal-treatment",
  "truly-altruistic",
] as const;

export type ModelTag = (typeof MODEL_TAGS)[number];

export const NOTION_TAGS = [
  "core",
  "individual-rationality",
  "nash",
  "individual-stability",
] as const;

export type NotionTag = (typeof NOTION_TAGS)[number];

export interface GameDocument {
  format: typeof GAME_FORMAT;
  players: string[];
  edges: [string, string][];
  model: ModelTag | Record<string, ModelTag>;
  valuations?: Record<string, Record<string, string>>;
  aggregation?: "mean" | "sum";
}

export interface PartitionDocument {
  format: typeof PARTITION_FORMAT;
  blocks: string[][];
}

export type WitnessDocument =
  | { kind: "coalition"; coalition: string[] }
  | { kind: "player"; player: string }
  | { kind: "deviation"; player: string; target: string[] };

export interface VerdictDocument {
  stable: boolean;
  auxiliary: boolean;
  witness: WitnessDocument | null;
}

export interface CertifyResponse {
  verdicts: Record<string, VerdictDocument>;
  all_stable: boolean;
  conventions: Record<string, string>;
}

export interface EvaluateRow {
  player: string;
  coalition: string[];
  utility: string;
  model: ModelTag;
}

export interface EvaluateResponse {
  rows: EvaluateRow[];
  conventions: Record<string, string>;
}

export interface ExampleEntry {
  name: string;
  game: GameDocument;
}

export interface HealthResponse {
  version: string;
  caps: { max_partition_players: number; max_sweep_players: number };
  core_time_budget_seconds?: number;
}
