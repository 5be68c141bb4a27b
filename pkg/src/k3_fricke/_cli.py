# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

"""
The ``k3-fricke`` command.

Every subcommand prints one JSON document ``{"command", "input",
"output"}`` to standard output. Diagnostics and the verify summary go to
standard error. Exit status: 0 on success, 2 on argument errors, 3 on
domain errors, 4 on consistency failures.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

from ._errors import ConsistencyError, DomainError
from ._lattice import MukaiVector
from ._verify import SweepLimits, verify
from .arith import class_number, reduced_forms
from .classify import classify_element
from .counting import (
    PresentationKind,
    count_involution_classes,
    count_subgroups_mod2,
    presentation,
)
from .cubic import has_associated_cubic
from .fricke import fricke_invariants
from .fricke_group import DetTag, make_element
from .gamma0 import gamma0_invariants
from .mukai import reflection, tensor_matrix, twist_matrix

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_CONSISTENCY = 4

_GROUPS = {
    "pi1orb": PresentationKind.PI1ORB_Q0,
    "fricke": PresentationKind.FRICKE_GROUP,
    "auts-mod2": PresentationKind.AUTS_MOD2,
}

_DET_TAGS = {"1": DetTag.UNIT, "n": DetTag.FRICKE}

_LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _int_tuple(length: int) -> Callable[[str], tuple[int, ...]]:
    def parse(text: str) -> tuple[int, ...]:
        try:
            values = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"expected {length} comma-separated integers, got {text!r}"
            ) from None
        if len(values) != length:
            raise argparse.ArgumentTypeError(
                f"expected {length} comma-separated integers, got {text!r}"
            )
        return values

    return parse


def _invariants(args: argparse.Namespace) -> dict[str, Any]:
    out: dict[str, Any] = gamma0_invariants(args.n).as_dict()
    if args.fricke:
        out.update(fricke_invariants(args.n).as_dict())
    return out


def _count(args: argparse.Namespace) -> dict[str, Any]:
    if args.mode == "involutions":
        return {
            "degree": args.degree,
            "involution_classes": count_involution_classes(args.degree),
        }
    return count_subgroups_mod2(args.degree).as_dict()


def _presentation(args: argparse.Namespace) -> dict[str, Any]:
    return presentation(args.n, _GROUPS[args.group]).as_dict()


def _classify(args: argparse.Namespace) -> dict[str, Any]:
    g = make_element(args.n, *args.matrix, _DET_TAGS[args.det])
    return classify_element(g).as_dict()


def _cubic(args: argparse.Namespace) -> dict[str, Any]:
    return has_associated_cubic(args.degree).as_dict()


def _class_number(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "D": args.D,
        "h": class_number(args.D),
        "forms": [[f.a, f.b, f.c] for f in reduced_forms(args.D)],
    }


def _twist_matrix(args: argparse.Namespace) -> dict[str, Any]:
    if args.delta is not None:
        delta = MukaiVector(*args.delta, args.n)
        return {
            "delta": delta.as_list(),
            "matrix": reflection(delta).as_list(),
        }
    return {
        "tensor": tensor_matrix(args.n).as_list(),
        "twist": twist_matrix(args.n).as_list(),
    }


def _verify(args: argparse.Namespace) -> dict[str, Any]:
    limits = SweepLimits(
        max_n=args.max_n,
        cubic_max_n=args.max_n,
        polychotomy_bound=args.polychotomy_bound,
        seed=args.seed,
    )
    report = verify(limits, jobs=args.jobs, file=sys.stderr)
    if not report.ok:
        raise ConsistencyError(
            f"verify: {report.failures} failures; see the summary above"
        )
    return report.as_dict()


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3-fricke",
        description="Exact invariants of Fricke groups attached to "
        "K3 surfaces of Picard number one.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or details (-vv) to standard error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of X0(n), X0+(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fricke", action="store_true")
    p.set_defaults(handler=_invariants)

    p = sub.add_parser("count", help="conjugacy classes of subgroups")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--mode",
        choices=("involutions", "subgroups-mod2"),
        default="involutions",
    )
    p.set_defaults(handler=_count)

    p = sub.add_parser("presentation", help="free product presentations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=tuple(_GROUPS), required=True)
    p.set_defaults(handler=_presentation)

    p = sub.add_parser("classify", help="dynamical type of an element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", type=_int_tuple(4), required=True)
    p.add_argument("--det", choices=tuple(_DET_TAGS), default="1")
    p.set_defaults(handler=_classify)

    p = sub.add_parser("cubic", help="associated cubic fourfolds")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=_cubic)

    p = sub.add_parser("class-number", help="reduced forms of a negative D")
    p.add_argument("--D", dest="D", type=int, required=True)
    p.set_defaults(handler=_class_number)

    p = sub.add_parser("twist-matrix", help="standard lattice isometries")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=_int_tuple(3), default=None)
    p.set_defaults(handler=_twist_matrix)

    p = sub.add_parser("verify", help="run the consistency sweeps")
    p.add_argument("--max-n", type=int, default=500)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--polychotomy-bound", type=int, default=40)
    p.set_defaults(handler=_verify)

    return parser


def _input_echo(args: argparse.Namespace) -> dict[str, Any]:
    skip = {"command", "handler", "verbose"}
    return {
        k: list(v) if isinstance(v, tuple) else v
        for k, v in vars(args).items()
        if k not in skip
    }


def run(argv: Sequence[str] | None = None, *, stdout=None) -> int:
    """
    Parse `argv`, run the subcommand and print its JSON result.

    Returns
    -------
    int
        The exit status.
    """
    stdout = sys.stdout if stdout is None else stdout
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(
        stream=sys.stderr,
        level=_LOG_LEVELS[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    _logger.debug("%s %s", args.command, _input_echo(args))
    try:
        output = args.handler(args)
    except DomainError as e:
        print(f"k3-fricke {args.command}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as e:
        print(
            f"k3-fricke {args.command}: consistency failure: {e}",
            file=sys.stderr,
        )
        return EXIT_CONSISTENCY
    result = {
        "command": args.command,
        "input": _input_echo(args),
        "output": output,
    }
    print(json.dumps(result, indent=2), file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
