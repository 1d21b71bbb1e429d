#!/usr/bin/env python3
"""Tabulate functor values and collapse order types over a small grid.

Useful for eyeballing how the two hierarchies relate before trusting a
new expression in the curated suites.
"""

import argparse

from dilcalc.errors import FRAGMENT_ERRORS
from dilcalc.expr import parse_dil, to_str
from dilcalc.jfunctor import j_eval, jplus_eval, jprime_eval
from dilcalc.ordinal import ord_str, parse_ord
from dilcalc.psi import psi_clause_otp

DEFAULT_EXPRS = ["0", "1", "Const(w)", "Id", "Id+1", "Id*2", "Id*w", "omega[Id]"]
DEFAULT_GAMMAS = ["w", "w^2"]


def cell(fn, expr, gamma):
    try:
        return ord_str(fn(expr, gamma))
    except FRAGMENT_ERRORS as exc:
        return f"<{type(exc).__name__}>"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--expr", action="append", default=None)
    parser.add_argument("--gamma", action="append", default=None)
    args = parser.parse_args()
    exprs = args.expr or DEFAULT_EXPRS
    gammas = args.gamma or DEFAULT_GAMMAS
    for gs in gammas:
        g = parse_ord(gs)
        print(f"== gamma = {gs}")
        for es in exprs:
            d = parse_dil(es)
            row = {
                "J": cell(lambda a, b: j_eval(a, b).value, d, g),
                "J'": cell(lambda a, b: jprime_eval(a, b).value, d, g),
                "J+": cell(lambda a, b: jplus_eval(a, b).value, d, g),
                "psi": cell(psi_clause_otp, d, g),
            }
            print(f"  {to_str(d):<14} " + "  ".join(f"{k}={v}" for k, v in row.items()))


if __name__ == "__main__":
    main()
