/** What-if analysis for one player: the partitions that arise from moving
 * them into each other bucket (or out on their own), ready to be priced by
 * the server. Badges are derived here too, so the rendering layer stays
 * dumb and the test suite can compare them against the CLI's verdicts.
 */

import { exportPartition } from "./documents.js";
import { assignToBucket, bucketOf, type EditorState } from "./state.js";
import type { CertifyResponse, NotionTag, PartitionDocument } from "./types.js";

export interface WhatIfMove {
  description: string;
  partition: PartitionDocument;
}

export function whatIfMoves(state: EditorState, player: string): WhatIfMove[] {
  const current = bucketOf(state, player);
  const moves: WhatIfMove[] = [];
  state.buckets.forEach((bucket, index) => {
    if (index === current) return;
    moves.push({
      description: `join {${bucket.join(", ")}}`,
      partition: exportPartition(assignToBucket(state, player, index)),
    });
  });
  if ((state.buckets[current]?.length ?? 0) > 1) {
    moves.push({
      description: "go alone",
      partition: exportPartition(assignToBucket(state, player, -1)),
    });
  }
  return moves;
}

export interface Badge {
  notion: NotionTag;
  stable: boolean;
  auxiliary: boolean;
  witness: string;
  /** Players to highlight on the canvas when this badge is selected. */
  highlight: string[];
}

export function badgesFrom(report: CertifyResponse): Badge[] {
  return Object.entries(report.verdicts).map(([notion, verdict]) => {
    let witness = "";
    let highlight: string[] = [];
    if (verdict.witness) {
      const w = verdict.witness;
      if (w.kind === "coalition") {
        witness = `{${w.coalition.join(", ")}} blocks`;
        highlight = w.coalition;
      } else if (w.kind === "player") {
        witness = `${w.player} would rather be alone`;
        highlight = [w.player];
      } else {
        const target = w.target.length ? `{${w.target.join(", ")}}` : "a new singleton";
        witness = `${w.player} would defect to ${target}`;
        highlight = [w.player, ...w.target];
      }
    }
    return {
      notion: notion as NotionTag,
      stable: verdict.stable,
      auxiliary: verdict.auxiliary,
      witness,
      highlight,
    };
  });
}
