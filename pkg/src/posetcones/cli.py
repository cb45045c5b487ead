"""Command line front end.

Exit codes: 0 success, 2 malformed input, 3 valid input outside a routine's
domain, 4 an internal cross-check or verification failed.  All output is
byte-deterministic for fixed arguments; --machine switches to bare
space-separated values.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter

from . import bijections, whitney
from .errors import (
    DegreeExceeded,
    IndexOutOfRange,
    NotDisjointChains,
    NotLinearExtension,
    NotNaturallyLabeled,
    NotTransverse,
    ParseError,
    PosetconesError,
    SupportMismatch,
    WidthExceeded,
    ZeroPolynomial,
)
from .foata import (
    fcyc,
    foata_phi,
    foata_phi_inv,
    intercalation,
    multiset_perm_to_text,
    parse_multiset_perm,
    prime_decompose,
)
from .genfun import chains_gf_rhs, stirling_row_check, verify_chains_gf
from .partitions import parse_partition, partition_to_text
from .polynomials import count_real_roots, poly_from_machine
from .posets import (
    ChainDecomposition,
    chain_cover_width2,
    count_linear_extensions,
    grid,
    linear_extensions,
    opposite,
    parse_poset,
    random_poset,
)

_DOMAIN_ERRORS = (
    IndexOutOfRange,
    WidthExceeded,
    NotTransverse,
    NotLinearExtension,
    NotNaturallyLabeled,
    NotDisjointChains,
    ZeroPolynomial,
    DegreeExceeded,
    SupportMismatch,
)


def _load_poset(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_poset(text)


def _poly_text(poly, machine):
    return poly.machine_str() if machine else poly.human_str()


def _decomposition(P, args):
    if getattr(args, "p1", None) is None and getattr(args, "p2", None) is None:
        return chain_cover_width2(P)
    p1 = _int_list(args.p1) if args.p1 else []
    p2 = _int_list(args.p2) if args.p2 else []
    return ChainDecomposition(P, p1, p2)


def _int_list(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ParseError(f"bad label list {text!r}") from None


# -- commands -------------------------------------------------------------------

def cmd_poin(args):
    P = _load_poset(args.poset)
    poly = whitney.poincare(P, method=args.method, workers=args.workers)
    nle = count_linear_extensions(P)
    ok = poly(1) == nle
    if args.machine:
        print(poly.machine_str())
    else:
        print(f"Poin(P,t) = {poly.human_str()}")
        print(f"coeffs: {poly.machine_str()}")
        print(f"Poin(P,1) = {poly(1)}")
        print(f"#LinExt = {nle} [{'ok' if ok else 'MISMATCH'}]")
    if not ok:
        print("cross-check failed: Poin(P,1) != #LinExt", file=sys.stderr)
        return 4
    return 0


def cmd_linext(args):
    P = _load_poset(args.poset)
    count = 0
    for word in linear_extensions(P):
        print("[" + ",".join(str(x) for x in word) + "]")
        count += 1
    if not args.machine:
        print(f"count: {count}")
    return 0


def cmd_transverse(args):
    from .partitions import enumerate_transverse

    P = _load_poset(args.poset)
    total = 0
    parts = 0
    for pi in enumerate_transverse(P):
        w = pi.mobius_abs()
        total += w
        parts += 1
        if args.machine:
            print(partition_to_text(pi))
        else:
            print(f"{partition_to_text(pi)} weight={w}")
    nle = count_linear_extensions(P)
    ok = total == nle
    if not args.machine:
        print(f"total: {parts} partitions, weight sum = {total}, #LinExt = {nle} "
              f"[{'ok' if ok else 'MISMATCH'}]")
    if not ok:
        print("cross-check failed: weight sum != #LinExt", file=sys.stderr)
        return 4
    return 0


def cmd_bij(args):
    P = _load_poset(args.poset)
    if args.variant == "phi":
        tau = bijections.parse_permutation(
            args.perm, n=P.n, implicit_fixed=args.implicit_fixed
        )
        word = bijections.phi(P, tau)
        print("[" + ",".join(str(x) for x in word) + "]")
    elif args.variant == "psi":
        tau = bijections.psi(P, _int_list(args.word))
        print(bijections.permutation_to_text(tau, cycles=True))
    elif args.variant == "omega":
        d = _decomposition(P, args)
        pi = bijections.omega(P, d, _int_list(args.word))
        print(partition_to_text(pi))
    else:  # omega-inv
        d = _decomposition(P, args)
        pi = parse_partition(args.partition, n=P.n)
        word = bijections.omega_inv(P, d, pi)
        print("[" + ",".join(str(x) for x in word) + "]")
    return 0


def _parse_support(text):
    vals = _int_list(text)
    if any(v < 0 for v in vals):
        raise ParseError(f"negative multiplicity in {text!r}")
    return vals


def cmd_foata(args):
    if args.variant == "decompose":
        support = _parse_support(args.support) if args.support else None
        sigma = parse_multiset_perm(args.array, support=support)
        factors = prime_decompose(sigma)
        for f in factors:
            print(multiset_perm_to_text(f))
        if not args.machine:
            print(f"fcyc: {len(factors)}")
    elif args.variant == "intercalate":
        rho = parse_multiset_perm(args.left)
        tau = parse_multiset_perm(args.right)
        print(multiset_perm_to_text(intercalation(rho, tau)))
    elif args.variant == "fcyc":
        support = _parse_support(args.support) if args.support else None
        sigma = parse_multiset_perm(args.array, support=support)
        print(fcyc(sigma))
    elif args.variant == "phi":
        a = _parse_support(args.support)
        tau = foata_phi(a, _int_list(args.word))
        print(bijections.permutation_to_text(tau, cycles=True))
    else:  # phi-inv
        a = _parse_support(args.support)
        tau = bijections.parse_permutation(
            args.perm, n=sum(a), implicit_fixed=args.implicit_fixed
        )
        lam = foata_phi_inv(a, tau)
        print("[" + ",".join(str(x) for x in lam) + "]")
    return 0


def cmd_genfun(args):
    if args.variant == "rhs":
        rhs = chains_gf_rhs(args.ell, args.degree)
        for exps in sorted(rhs.terms):
            poly = rhs.terms[exps]
            label = ",".join(str(e) for e in exps)
            print(f"{label} : {_poly_text(poly, args.machine)}")
        return 0
    if args.variant == "verify":
        report = verify_chains_gf(args.ell, args.degree)
        bad = 0
        for a, poly, ok in report:
            label = ",".join(str(e) for e in a)
            print(f"{label} : {_poly_text(poly, args.machine)} : "
                  f"{'MATCH' if ok else 'MISMATCH'}")
            bad += 0 if ok else 1
        if not args.machine:
            if bad:
                print(f"MISMATCHES: {bad}/{len(report)}")
            else:
                print(f"ALL MATCH ({len(report)} coefficients)")
        return 4 if bad else 0
    from .posets import antichain
    from .whitney import poincare_via_lrmax

    ok = stirling_row_check(args.n)
    print(_poly_text(poincare_via_lrmax(antichain(args.n)), args.machine))
    if not args.machine:
        print("stirling row check: " + ("ok" if ok else "FAILED"))
    return 0 if ok else 4


def cmd_table(args):
    if args.n_max < 2:
        raise ParseError("--n-max must be at least 2")
    if args.n_max > 8:
        print("warning: rows beyond n=8 grow quickly", file=sys.stderr)
    for n in range(2, args.n_max + 1):
        poly = whitney.poincare_via_transverse(grid(3, n))
        if args.machine:
            print(f"{n}: {poly.machine_str()}")
        else:
            print(f"n={n}: {poly.human_str()}")
    return 0


def cmd_roots(args):
    poly = poly_from_machine(args.coeffs)
    k = count_real_roots(poly)
    if args.machine:
        print(k)
    else:
        print(f"real roots: {k}")
    return 0


def cmd_selfcheck(args):
    rng = random.Random(args.seed)
    probs = [round(0.1 * k, 1) for k in range(1, 10)]
    fails = []
    ran = Counter()

    for trial in range(args.trials):
        n = rng.randint(1, args.n_max)
        p = probs[rng.randrange(len(probs))]
        P = random_poset(n, p, rng)
        tag = f"trial {trial} (n={n}, p={p})"

        dp = whitney.poincare_via_transverse(P)
        sweep = whitney.poincare_via_lrmax(P, workers=args.workers)
        ran["transverse=lrmax"] += 1
        if dp != sweep:
            fails.append(f"{tag}: transverse != lrmax")
        nle = count_linear_extensions(P)
        ran["poin(1)=#linext"] += 1
        if dp(1) != nle:
            fails.append(f"{tag}: Poin(1) != #LinExt")
        ran["duality"] += 1
        if whitney.poincare_via_transverse(opposite(P)) != dp:
            fails.append(f"{tag}: dual polynomial differs")

        words = []
        for w in linear_extensions(P):
            words.append(w)
            if len(words) >= 200:
                break
        ran["phi/psi round trips"] += 1
        for w in words:
            tau = bijections.psi(P, w)
            if bijections.phi(P, tau) != w:
                fails.append(f"{tag}: phi(psi(w)) != w for {w}")
                break
            if tau.cycle_count() != bijections.lrmax_count(P, w):
                fails.append(f"{tag}: cycle count != LR maxima for {w}")
                break

        try:
            d = chain_cover_width2(P)
        except WidthExceeded:
            d = None
        if d is not None:
            ran["width2 agreement"] += 1
            if whitney.poincare_via_width2(P, d) != dp:
                fails.append(f"{tag}: width2 polynomial differs")
            for w in words:
                pi = bijections.omega(P, d, w)
                if bijections.omega_inv(P, d, pi) != w:
                    fails.append(f"{tag}: omega round trip broke for {w}")
                    break
                pairs = sum(1 for b in pi.blocks if len(b) == 2)
                if pairs != bijections.des_p1p2(P, d, w):
                    fails.append(f"{tag}: pair blocks != descents for {w}")
                    break

    stirling_ok = stirling_row_check(6)
    if not stirling_ok:
        fails.append("stirling row n=6 check failed")
    gf = verify_chains_gf(2, 5)
    if not all(ok for _, _, ok in gf):
        fails.append("chains generating function mismatch at ell=2, cap=5")

    if not args.machine:
        for name in sorted(ran):
            print(f"{name}: {ran[name]} posets")
        print("stirling row n=6: " + ("ok" if stirling_ok else "FAILED"))
        print(f"chains gf ell=2 cap=5: {sum(1 for _, _, ok in gf if ok)}/{len(gf)} match")
        for msg in fails:
            print("FAIL " + msg)
    print("PASS" if not fails else "FAIL")
    return 0 if not fails else 4


# -- parser ----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="bare machine-readable output")
    common.add_argument("--workers", type=int, default=1,
                        help="worker processes for the extension sweep")
    common.add_argument("--seed", type=int, default=42,
                        help="seed for randomized commands")

    parser = argparse.ArgumentParser(
        prog="posetcones",
        description="Cone polynomials of finite posets and their bijections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poin", parents=[common],
                       help="cone polynomial of a poset file")
    p.add_argument("poset", help="poset file, or - for stdin")
    p.add_argument("--method", default="auto",
                   choices=["auto", "transverse", "lrmax", "foata", "width2"])
    p.set_defaults(func=cmd_poin)

    p = sub.add_parser("linext", parents=[common], help="list linear extensions")
    p.add_argument("poset")
    p.set_defaults(func=cmd_linext)

    p = sub.add_parser("transverse", parents=[common],
                       help="list transverse partitions with weights")
    p.add_argument("poset")
    p.set_defaults(func=cmd_transverse)

    p = sub.add_parser("bij", parents=[common],
                       help="cycle and descent bijections")
    p.add_argument("variant", choices=["phi", "psi", "omega", "omega-inv"])
    p.add_argument("--poset", required=True)
    p.add_argument("--perm", help="permutation, cycles or one-line")
    p.add_argument("--word", help="linear extension, comma separated")
    p.add_argument("--partition", help="set partition, 1,4|2|3 form")
    p.add_argument("--p1", help="explicit chain 1 labels")
    p.add_argument("--p2", help="explicit chain 2 labels")
    p.add_argument("--implicit-fixed", action="store_true",
                   help="labels missing from cycles are fixed points")
    p.set_defaults(func=_checked_bij)

    p = sub.add_parser("foata", parents=[common],
                       help="multiset permutation factorizations")
    p.add_argument("variant",
                   choices=["decompose", "intercalate", "fcyc", "phi", "phi-inv"])
    p.add_argument("array", nargs="?", help="two-line array top;bottom, or word")
    p.add_argument("left", nargs="?", help="left factor (intercalate)")
    p.add_argument("right", nargs="?", help="right factor (intercalate)")
    p.add_argument("--support", help="chain multiplicities, comma separated")
    p.add_argument("--word", help="linear extension of the chains")
    p.add_argument("--perm", help="permutation for phi-inv")
    p.add_argument("--implicit-fixed", action="store_true")
    p.set_defaults(func=_checked_foata)

    p = sub.add_parser("genfun", parents=[common],
                       help="generating function coefficients and checks")
    p.add_argument("variant", choices=["rhs", "verify", "stirling"])
    p.add_argument("--ell", type=int, default=2, help="number of variables")
    p.add_argument("--degree", type=int, default=5, help="total degree cap")
    p.add_argument("--n", type=int, default=6, help="row for stirling")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("table", parents=[common],
                       help="cone polynomials of the 3 x n grid")
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("selfcheck", parents=[common],
                       help="randomized cross-method invariants")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_selfcheck)

    p = sub.add_parser("roots", parents=[common],
                       help="count distinct real roots of an integer polynomial")
    p.add_argument("coeffs", help="ascending coefficients, space or comma separated")
    p.set_defaults(func=cmd_roots)

    return parser


def _checked_bij(args):
    need = {
        "phi": ["perm"],
        "psi": ["word"],
        "omega": ["word"],
        "omega-inv": ["partition"],
    }[args.variant]
    for field in need:
        if getattr(args, field) is None:
            raise ParseError(f"bij {args.variant} requires --{field}")
    return cmd_bij(args)


def _checked_foata(args):
    if args.variant == "intercalate":
        # positionals shift: array/left hold the two factors
        if args.array is None or args.left is None:
            raise ParseError("foata intercalate requires two arrays")
        args.left, args.right = args.array, args.left
    elif args.variant in ("decompose", "fcyc"):
        if args.array is None:
            raise ParseError(f"foata {args.variant} requires an array argument")
    elif args.variant == "phi":
        if args.support is None or args.word is None:
            raise ParseError("foata phi requires --support and --word")
    else:
        if args.support is None or args.perm is None:
            raise ParseError("foata phi-inv requires --support and --perm")
    return cmd_foata(args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PosetconesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
