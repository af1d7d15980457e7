#!/usr/bin/env python3
"""Regenerate the measurements behind the frozen empirical caps.

Runs every empirical-mode check on its default grid and on the doubled grid,
printing measured suprema, the drift under doubling, the frozen cap and the
headroom.  Use this after changing grids or evaluators to decide whether the
caps in the constant ledger need re-freezing (cap = measured * 1.25).
"""

import json

import thetagauss.certify as ct

EMPIRICAL = ["EST0_LOCAL", "DERIV_1D", "DERIV_D", "G12", "G14", "PSI_DERIV",
             "DELTA_RATIO", "GDIFF_HOLDER"]


def main():
    print(f"{'check / slice':42s} {'measured':>12s} {'doubled':>12s} "
          f"{'drift':>7s} {'cap':>10s} {'headroom':>9s}")
    for cid in EMPIRICAL:
        cdef = ct.REGISTRY[cid]
        base = ct.run_check(cid)
        dbl = ct.run_check(cid, cdef.grid.doubled())
        for rb, rd in zip(base.records, dbl.records):
            slice_params = {k: v for k, v in rb.params.items() if k != "mode"}
            key = f"{cid} {json.dumps(slice_params)}"
            drift = abs(rd.lhs / rb.lhs - 1.0) if rb.lhs else 0.0
            print(f"{key:42s} {rb.lhs:12.5g} {rd.lhs:12.5g} {drift:6.2%} "
                  f"{rb.rhs:10.4g} {rb.rhs / max(rb.lhs, 1e-300):8.2f}x")


if __name__ == "__main__":
    main()
