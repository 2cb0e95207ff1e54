/** Per-view optimization schedule and grid traversal order. */

import { ViewIndex } from './field';

export interface OptimizerSchedule {
  learningRate: number;
  maxEpochs: number;
  /** The first optimized view gets maxEpochs * firstViewMultiplier epochs. */
  firstViewMultiplier: number;
}

/**
 * A low learning rate with a long epoch budget converges to a markedly more
 * consistent solution than a fast schedule, and drifts the stylization less
 * while getting there; the divergence detector usually stops views well
 * before the budget is spent.
 */
export const DEFAULT_SCHEDULE: OptimizerSchedule = {
  learningRate: 3e-3,
  maxEpochs: 150,
  firstViewMultiplier: 2,
};

/**
 * Boustrophedonic traversal of the non-central views: start at
 * (-radiusS, -radiusT), sweep rows alternately left-to-right and
 * right-to-left, and skip (0, 0) in place. Consecutive views are grid
 * neighbors except at the central skip, so the network carried from view to
 * view always starts near content it has just fit.
 */
export function traversalOrder(radiusS: number, radiusT: number): ViewIndex[] {
  const out: ViewIndex[] = [];
  for (let t = -radiusT; t <= radiusT; t++) {
    const row: number[] = [];
    for (let s = -radiusS; s <= radiusS; s++) row.push(s);
    if ((t + radiusT) % 2 === 1) row.reverse();
    for (const s of row) {
      if (s !== 0 || t !== 0) out.push({ s, t });
    }
  }
  return out;
}
