"""Command line interface.

Four subcommands: ``ring`` and ``algebra`` inspect algebraic objects and
their spectra, ``topo`` runs space-level constructions on a JSON-encoded
finite space, and ``verify`` runs the claim suite over a generated corpus.
All output is deterministic; JSON is emitted with sorted keys.

Exit codes: 0 on success, 1 when a verified claim fails, 2 on any input or
construction error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bridge, reflection, sober
from .boolean_algebra import (
    algebra_from_json,
    algebra_to_json_dict,
    powerset_algebra,
    stone_decomposition,
)
from .caps import caps_from_env
from .errors import SpectraError, ValidationError
from .harness import CorpusConfig, generate_corpus, resolve_suite, run_suite
from .rings import (
    FiniteRing,
    ideal_generated,
    idempotents,
    max_regular_ideals,
    mr_decomposition,
    prime_ideals,
    quotient,
    ring_from_json,
    ring_to_json_dict,
    zariski_spectrum,
    zmod,
    product,
)
from .topology import (
    clopen_generated_component_space,
    clopens,
    connected_components,
    space_from_json,
    space_to_json_dict,
    specialization_dot,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="finite spaces, Boolean algebras, finite commutative rings, "
        "and the bridges between their spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring_p = sub.add_parser("ring", help="inspect a finite commutative ring")
    src = ring_p.add_mutually_exclusive_group(required=True)
    src.add_argument("--zmod", type=int, metavar="N", help="integers mod N")
    src.add_argument(
        "--product",
        metavar="N1,N2,...",
        help="product of integers mod N1, mod N2, ...",
    )
    src.add_argument("--file", metavar="PATH", help="ring tables as JSON")
    ring_p.add_argument(
        "--quotient",
        metavar="LABELS",
        help="comma separated element labels; quotient by the ideal they generate",
    )
    ring_p.add_argument(
        "action", choices=["primes", "idempotents", "mr", "components", "spec", "json"]
    )
    ring_p.add_argument("--dot", action="store_true", help="emit Graphviz instead of JSON")

    alg_p = sub.add_parser("algebra", help="inspect a finite Boolean algebra")
    asrc = alg_p.add_mutually_exclusive_group(required=True)
    asrc.add_argument("--powerset", type=int, metavar="K", help="powerset algebra on K atoms")
    asrc.add_argument("--file", metavar="PATH", help="algebra tables as JSON")
    alg_p.add_argument("action", choices=["spec", "json"])
    alg_p.add_argument("--dot", action="store_true", help="emit Graphviz instead of JSON")

    topo_p = sub.add_parser("topo", help="operate on a finite space")
    topo_p.add_argument("--file", required=True, metavar="PATH", help="space as JSON")
    topo_p.add_argument(
        "action", choices=["components", "clopens", "reflect", "soberify"]
    )
    topo_p.add_argument("--dot", action="store_true", help="emit Graphviz instead of JSON")

    verify_p = sub.add_parser("verify", help="run the claim suite over a corpus")
    verify_p.add_argument(
        "--suite",
        default="all",
        metavar="NAME",
        help="'all', a claim id, or an alias (see error message for the list)",
    )
    verify_p.add_argument("--max-points", type=int, default=CorpusConfig.max_points)
    verify_p.add_argument("--max-ring", type=int, default=CorpusConfig.zmod_max)
    verify_p.add_argument("--max-product", type=int, default=CorpusConfig.product_max)
    verify_p.add_argument("--max-quotient", type=int, default=CorpusConfig.quotient_max)
    verify_p.add_argument("--max-atoms", type=int, default=CorpusConfig.atom_max)
    verify_p.add_argument("--max-target", type=int, default=CorpusConfig.adjunction_targets)
    verify_p.add_argument("--seed", type=int, default=0)
    verify_p.add_argument("--json", metavar="PATH", help="also write the full report as JSON")
    verify_p.add_argument(
        "--quiet", action="store_true", help="print only the summary line"
    )
    return parser


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def _build_ring(args, caps) -> FiniteRing:
    if args.zmod is not None:
        ring = zmod(args.zmod)
    elif args.product is not None:
        try:
            factors = [int(part) for part in args.product.split(",")]
        except ValueError as exc:
            raise ValidationError(f"bad --product value {args.product!r}") from exc
        if len(factors) < 2:
            raise ValidationError("--product needs at least two factors")
        ring = zmod(factors[0])
        for k in factors[1:]:
            ring = product(ring, zmod(k), caps)
    else:
        ring = ring_from_json(_read(args.file))
    if args.quotient is not None:
        labels = [part.strip() for part in args.quotient.split(",")]
        index = {label: i for i, label in enumerate(ring.carrier)}
        missing = [label for label in labels if label not in index]
        if missing:
            raise ValidationError(f"unknown ring elements: {', '.join(missing)}")
        ideal = ideal_generated(ring, [index[label] for label in labels])
        ring = quotient(ring, ideal, name=f"{ring.name}/<{','.join(labels)}>")
    return ring


def _ring_command(args, caps) -> int:
    ring = _build_ring(args, caps)
    if args.action == "primes":
        primes = prime_ideals(ring, caps)
        print(_dump([list(p.labels()) for p in primes]))
    elif args.action == "idempotents":
        print(_dump([ring.carrier[e] for e in idempotents(ring)]))
    elif args.action == "mr":
        print(_dump([list(m.labels()) for m in max_regular_ideals(ring)]))
    elif args.action == "components":
        space = zariski_spectrum(ring, caps)
        comps = bridge.components_via_max_regular(ring, caps)
        rows = [
            {"ideal": list(ideal.labels()), "component": space.labels_of(mask)}
            for ideal, mask in sorted(comps.items(), key=lambda kv: kv[0].sort_key())
        ]
        if args.dot:
            comp_space, _ = bridge.component_space(ring, caps)
            print(specialization_dot(comp_space, name="components"))
        else:
            print(_dump(rows))
    elif args.action == "spec":
        space = zariski_spectrum(ring, caps)
        if args.dot:
            print(specialization_dot(space, name="spec"))
        else:
            primes = prime_ideals(ring, caps)
            mrspace, _ = mr_decomposition(ring)
            print(
                _dump(
                    {
                        "space": space_to_json_dict(space),
                        "points": {
                            space.points[k]: list(p.labels())
                            for k, p in enumerate(primes)
                        },
                        "max_regular_space": space_to_json_dict(mrspace),
                    }
                )
            )
    else:
        print(_dump(ring_to_json_dict(ring)))
    return 0


def _algebra_command(args, caps) -> int:
    if args.powerset is not None:
        alg = powerset_algebra(args.powerset, caps)
    else:
        alg = algebra_from_json(_read(args.file))
    if args.action == "json":
        print(_dump(algebra_to_json_dict(alg)))
        return 0
    space, ultra = stone_decomposition(alg)
    if args.dot:
        print(specialization_dot(space, name="stone"))
    else:
        print(
            _dump(
                {
                    "space": space_to_json_dict(space),
                    "ultrafilters": {
                        space.points[k]: sorted(alg.carrier[b] for b in f.members)
                        for k, f in enumerate(ultra)
                    },
                }
            )
        )
    return 0


def _topo_command(args, caps) -> int:
    space = space_from_json(_read(args.file))
    if args.action == "components":
        parts = connected_components(space)
        if args.dot:
            comp_space, _ = clopen_generated_component_space(space)
            print(specialization_dot(comp_space, name="components"))
        else:
            print(_dump([space.labels_of(b) for b in parts.blocks_sorted()]))
    elif args.action == "clopens":
        if args.dot:
            print(specialization_dot(space, name="space"))
        else:
            masks = sorted(clopens(space))
            print(_dump([space.labels_of(m) for m in masks]))
    elif args.action == "reflect":
        refl = reflection.reflect_space(space)
        if args.dot:
            print(specialization_dot(refl.image, name="reflection"))
        else:
            print(
                _dump(
                    {
                        "space": space_to_json_dict(refl.image),
                        "unit": {
                            space.points[i]: refl.image.points[refl.unit.assignment[i]]
                            for i in range(space.n)
                        },
                    }
                )
            )
    else:
        sb = sober.soberify(space)
        unit = sober.sober_unit(space, sb)
        if args.dot:
            print(specialization_dot(sb.space, name="sober"))
        else:
            print(
                _dump(
                    {
                        "space": space_to_json_dict(sb.space),
                        "unit": {
                            space.points[i]: sb.space.points[unit.assignment[i]]
                            for i in range(space.n)
                        },
                    }
                )
            )
    return 0


def _verify_command(args, caps) -> int:
    resolve_suite(args.suite)  # fail fast on a bad selector, before corpus work
    config = CorpusConfig(
        max_points=args.max_points,
        zmod_max=args.max_ring,
        product_max=args.max_product,
        quotient_max=args.max_quotient,
        atom_max=args.max_atoms,
        adjunction_targets=args.max_target,
    )
    corpus = generate_corpus(config, caps)
    result = run_suite(corpus, args.suite, caps, seed=args.seed)
    if not args.quiet:
        for report in result.reports:
            print(report.line())
    counts = result.summary()
    print(f"suite={result.selector} pass={counts['pass']} fail={counts['fail']}")
    if args.json:
        if args.json == "-":
            sys.stdout.write(result.to_json())
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(result.to_json())
    return 0 if result.passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        caps = caps_from_env()
        if args.command == "ring":
            return _ring_command(args, caps)
        if args.command == "algebra":
            return _algebra_command(args, caps)
        if args.command == "topo":
            return _topo_command(args, caps)
        return _verify_command(args, caps)
    except SpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
