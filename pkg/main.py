# file: main.py
from __future__ import annotations

import faulthandler
import io
import logging
import sys
import traceback
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from app.cli.parser import exponent_from_args, parse_args, parse_weights, run_config_from_args, selector_from_args
from app.cli.render import render
from app.core.errors import DesignsError
from app.core.logging_config import configure_logging
from app.core.models import HarnessReport, RunConfig, SpectrumReport, TableReproduction
from app.engine.runner import DesignEngine


def _dispatch(engine: DesignEngine, args: Any) -> Any:
    cmd = args.command
    if cmd == "spectrum":
        return engine.spectrum(selector_from_args(args), method=args.method, side=args.side)
    if cmd == "designs":
        return engine.designs(selector_from_args(args), args.t, parse_weights(args.weights))
    if cmd == "conjectures":
        return engine.conjectures(args.m)
    if cmd == "reproduce":
        return engine.reproduce(args.table, args.m)
    if cmd == "power":
        return engine.power(exponent_from_args(args))
    return engine.code_info(selector_from_args(args))


def _emit(text: str, run: RunConfig) -> None:
    if run.output_path is None:
        sys.stdout.write(text)
        return
    run.output_path.parent.mkdir(parents=True, exist_ok=True)
    run.output_path.write_text(text, encoding="utf-8")


def _result_code(payload: Any) -> int:
    """3 se i metodi indipendenti non concordano, 0 altrimenti."""
    if isinstance(payload, SpectrumReport) and payload.verdict == "MISMATCH":
        return 3
    if isinstance(payload, TableReproduction) and payload.status == "MISMATCH":
        return 3
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    # Abilita faulthandler per crash a livello C (numpy); serve un vero descrittore
    try:
        faulthandler.enable(file=sys.__stderr__, all_threads=True)
    except (AttributeError, ValueError, io.UnsupportedOperation):
        pass

    args = parse_args(argv)

    # Logging (carica anche la config: un budget non valido si ferma qui)
    try:
        configure_logging("DEBUG" if args.verbose else None)
    except ValidationError as e:
        sys.stderr.write(f"Configurazione non valida: {e.errors()[0].get('msg', e)}\n")
        return 1
    log = logging.getLogger("main")
    log.info("=== Avvio designs: comando %s ===", args.command)

    try:
        run = run_config_from_args(args)
        log.debug("Budget %d, worker %d, formato %s", run.enumeration_budget, run.worker_count,
                  run.output_format)
        engine = DesignEngine.from_defaults(run)
        payload = _dispatch(engine, args)
        _emit(render(payload, run.output_format), run)
    except DesignsError as e:
        log.error("%s: %s", e.__class__.__name__, e)
        return e.exit_code
    except ValidationError as e:
        # configurazione o budget non validi
        log.error("Configurazione non valida: %s", e.errors()[0].get("msg", e))
        return 1
    except Exception:
        log.error("Errore inatteso:\n%s", traceback.format_exc())
        return 3

    code = _result_code(payload)
    if isinstance(payload, HarnessReport):
        failed = sum(1 for e in payload.entries if e.status == "FAIL")
        if failed:
            log.warning("Harness: %d sotto-test FAIL", failed)
    if code:
        log.error("Verifica incrociata fallita (exit %d)", code)
    return code


if __name__ == "__main__":
    sys.exit(main())
