# file: app/cli/parser.py

from __future__ import annotations

import argparse
import os
from pathlib import Path
from typing import List, Optional, Sequence, Union

from app.constructions.power_functions import ExponentFamily, FamilyTag
from app.core.errors import OutOfDomain
from app.core.models import RunConfig
from app.core.settings import default_budget, load_app_config
from app.engine.selector import CodeKind, CodeSelector


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", type=Path, default=None, help="file di output (UTF-8)")
    common.add_argument("--workers", default=None, help="numero di processi o 'auto'")
    common.add_argument("--budget", type=int, default=None, help="budget di enumerazione")
    common.add_argument("--long", action="store_true", help="usa il budget esteso (run lunghi)")
    common.add_argument("-v", "--verbose", action="store_true", help="log DEBUG")
    return common


def _selector_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", choices=[t.value for t in FamilyTag])
    group.add_argument("--rm-dual", action="store_true", help="RM(m-2, m)")
    group.add_argument("--rm", type=int, metavar="R", help="RM(R, m)")
    group.add_argument("--hamming", action="store_true", help="C_(q,m)")
    group.add_argument("--projective", choices=["bch", "two-zero"])
    p.add_argument("--s", type=int, default=None, help="esponente esplicito")
    p.add_argument("--h", type=int, default=None, help="parametro h della famiglia")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--extended", action="store_true", help="codice esteso")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designs",
        description="Codici lineari, spettri dei pesi e t-disegni di Assmus-Mattson",
    )
    common = _common()
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="distribuzione dei pesi")
    _selector_args(p)
    p.add_argument("--method", choices=["brute", "macwilliams", "closed-form", "all"], default="all")
    p.add_argument("--side", choices=["primal", "dual"], default="primal")

    p = sub.add_parser("designs", parents=[common], help="previsione AM e verifica dei disegni")
    _selector_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--weights", default="all", help="lista '3,4' oppure dual | primal | all")

    p = sub.add_parser("conjectures", parents=[common], help="harness sulle congetture proiettive")
    p.add_argument("--m", type=int, default=3)

    p = sub.add_parser("reproduce", parents=[common], help="riproduce una tabella dei pesi")
    p.add_argument("--table", choices=["1", "2", "3", "gg2"], required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("power", parents=[common], help="verifica APN / planare di x^s")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", choices=[t.value for t in FamilyTag], default="raw")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--q", type=int, default=None)

    p = sub.add_parser("code", parents=[common], help="parametri e JSON di una costruzione")
    _selector_args(p)
    return parser


# ----------------------------------------------------------------------
#  Conversione argomenti -> oggetti del dominio
# ----------------------------------------------------------------------


def parse_weights(text: str) -> Union[str, List[int]]:
    text = text.strip()
    if text in ("dual", "primal", "all"):
        return text
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise OutOfDomain(f"Lista di pesi non valida: {text!r}") from e


def exponent_from_args(args: argparse.Namespace) -> ExponentFamily:
    return ExponentFamily.of(args.family, args.m, h=args.h, s=args.s, q=args.q)


def selector_from_args(args: argparse.Namespace) -> CodeSelector:
    if args.family:
        return CodeSelector(CodeKind.FAMILY, args.m, exponent=exponent_from_args(args),
                            extended=args.extended)
    if args.rm_dual:
        return CodeSelector(CodeKind.RM_DUAL, args.m, extended=args.extended)
    if args.rm is not None:
        return CodeSelector(CodeKind.RM, args.m, r=args.rm, extended=args.extended)
    if args.hamming:
        return CodeSelector(CodeKind.HAMMING, args.m, q=args.q, extended=args.extended)
    kind = CodeKind.PROJECTIVE_BCH if args.projective == "bch" else CodeKind.PROJECTIVE_TWO_ZERO
    return CodeSelector(kind, args.m, extended=args.extended)


def _workers(value: Optional[str]) -> int:
    if value is None:
        return load_app_config().enumeration.resolved_workers()
    if value == "auto":
        return os.cpu_count() or 1
    try:
        return int(value)
    except ValueError as e:
        raise OutOfDomain(f"--workers deve essere un intero o 'auto', non {value!r}") from e


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.budget is not None:
        budget = args.budget
    elif args.long:
        budget = load_app_config().enumeration.long_budget
    else:
        budget = default_budget()
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "output", "workers", "budget", "long", "verbose")}
    return RunConfig(
        command=args.command,
        params=params,
        enumeration_budget=budget,
        worker_count=_workers(args.workers),
        output_format=args.format,
        output_path=args.output,
        long_mode=args.long,
    )


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
