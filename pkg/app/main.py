"""
Verifica esatta delle identità combinatorie sui polinomi di Legendre.

Comandi:
- `list`: registro delle identità (id, riferimento, parametri, guardie)
- `verify`: sweep esatti LHS = RHS, report tabellare o JSON
- `selfcheck`: suite di invarianti della libreria (con controllo floating point opzionale)
- `show-config`: configurazione effettiva (file JSON + ambiente)

Codici di uscita: 0 tutto verificato, 1 almeno un controesempio,
2 errore d'uso (id sconosciuto, opzione non valida), 3 errore interno.

Uso: python -m app.main verify --id alternating_zero --n-max 5 --format json
"""
import json
import logging
import os
import sys
import time
from typing import Optional, Tuple

import click
from pydantic import ValidationError

from app.schemas import RunConfig
from app.utils import (
    build_selfcheck_report,
    build_verify_report,
    get_identity_manager,
    render_registry,
    render_selfcheck_report,
    render_verify_report,
)
from identity_manager.exact.errors import ConfigurationError, UnknownIdentityError
from identity_manager.identity_manager import IdentityManager

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

# Logger della CLI (su stderr: lo stdout resta al report)
logger = logging.getLogger("legendre_sums")
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s] %(message)s")


def _fail_usage(message: str) -> None:
    click.echo(f"Errore: {message}", err=True)
    sys.exit(EXIT_USAGE)


def _fail_internal(e: Exception) -> None:
    logger.exception("Errore interno: %s", e)
    sys.exit(EXIT_INTERNAL)


def _load_manager() -> IdentityManager:
    """Manager con la configurazione effettiva; un valore di config non valido è un errore d'uso."""
    try:
        return get_identity_manager()
    except ConfigurationError as e:
        _fail_usage(f"configurazione non valida: {e}")
    except Exception as e:
        _fail_internal(e)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=lambda: os.getenv("LS_LOG_LEVEL", "INFO"),
    show_default="INFO (o LS_LOG_LEVEL)",
    help="Livello di log (su stderr).",
)
def cli(log_level: str) -> None:
    """Verifica esatta delle somme binomiali derivate dai polinomi di Legendre."""
    logger.setLevel(log_level.upper())


# ----------------------------------------------------------------------------
# LIST
# ----------------------------------------------------------------------------
@cli.command("list")
@click.option("--filter", "filter_text", default=None, help="Mostra solo gli id che contengono il testo.")
@click.option("--format", "output_format", type=click.Choice(["table", "json"]), default="table")
def list_command(filter_text: Optional[str], output_format: str) -> None:
    """Elenca il registro delle identità."""
    descriptors = _load_manager().registry(filter_text)
    if output_format == "json":
        click.echo(json.dumps([d.model_dump() for d in descriptors], ensure_ascii=False, indent=2))
    else:
        click.echo(render_registry(descriptors))


# ----------------------------------------------------------------------------
# VERIFY
# ----------------------------------------------------------------------------
@cli.command("verify")
@click.option("--id", "identity_ids", multiple=True, help="Identità da verificare (ripetibile).")
@click.option("--all", "all_ids", is_flag=True, help="Verifica l'intero registro.")
@click.option("--n-max", type=int, default=None, help="Indice massimo (default da config).")
@click.option("--x", "x_values", multiple=True, help="Valori razionali di x (es. 1/2), ripetibile.")
@click.option("--mu", "mu_values", multiple=True, help="Valori di μ (razionali, 'n' o 'n+1'), ripetibile.")
@click.option("--m", "m_values", multiple=True, type=int, help="Valori di m per log_moment, ripetibile.")
@click.option("--format", "output_format", type=click.Choice(["table", "json"]), default="table")
@click.option("--jobs", type=int, default=None, help="Numero di worker (processi).")
@click.option("--seed", type=int, default=None, help="Seme riportato nel report.")
@click.option("--fail-fast", is_flag=True, help="Interrompe alla prima identità con un controesempio.")
def verify_command(
    identity_ids: Tuple[str, ...],
    all_ids: bool,
    n_max: Optional[int],
    x_values: Tuple[str, ...],
    mu_values: Tuple[str, ...],
    m_values: Tuple[int, ...],
    output_format: str,
    jobs: Optional[int],
    seed: Optional[int],
    fail_fast: bool,
) -> None:
    """Verifica LHS = RHS in aritmetica esatta per le identità selezionate."""
    if not identity_ids and not all_ids:
        _fail_usage("indicare --id oppure --all.")
    manager = _load_manager()
    try:
        # le griglie del file di config passano dagli stessi validatori delle opzioni
        config = RunConfig(
            identity_ids=["all"] if all_ids else list(identity_ids),
            n_max=manager.n_max if n_max is None else n_max,
            x_grid=list(x_values) or manager.x_grid,
            mu_grid=list(mu_values) or manager.mu_grid,
            m_grid=list(m_values) or None,
            output_format=output_format,
            jobs=manager.jobs if jobs is None else jobs,
            fail_fast=fail_fast,
            seed=manager.seed if seed is None else seed,
        )
    except ValidationError as e:
        _fail_usage(f"configurazione non valida:\n{e}")
        return

    start = time.perf_counter()
    try:
        sweeps = manager.verify(
            identity_ids=config.identity_ids,
            n_max=config.n_max,
            param_samples=manager.param_samples(config.x_grid, config.mu_grid, config.m_grid),
            jobs=config.jobs,
            fail_fast=config.fail_fast,
        )
    except UnknownIdentityError as e:
        _fail_usage(str(e))
        return
    except Exception as e:
        _fail_internal(e)
        return

    report = build_verify_report(sweeps, config.seed, config.n_max, time.perf_counter() - start)
    if config.output_format == "json":
        click.echo(report.to_json())
    else:
        click.echo(render_verify_report(report))
    sys.exit(EXIT_MISMATCH if report.summary.fail else EXIT_OK)


# ----------------------------------------------------------------------------
# SELFCHECK
# ----------------------------------------------------------------------------
@cli.command("selfcheck")
@click.option("--seed", type=int, default=None, help="Seme delle sequenze casuali del lemma.")
@click.option("--skip-float", is_flag=True, help="Salta il controllo con quadratura floating point.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Suite eseguite in parallelo.")
@click.option("--format", "output_format", type=click.Choice(["table", "json"]), default="table")
def selfcheck_command(seed: Optional[int], skip_float: bool, jobs: Optional[int], output_format: str) -> None:
    """Esegue le suite di invarianti della libreria."""
    manager = _load_manager()
    seed = manager.seed if seed is None else seed
    try:
        outcomes = manager.selfcheck(seed=seed, skip_float=skip_float, jobs=jobs)
    except Exception as e:
        _fail_internal(e)
        return
    report = build_selfcheck_report(outcomes, seed, skip_float)
    if output_format == "json":
        click.echo(report.to_json())
    else:
        click.echo(render_selfcheck_report(report))
    sys.exit(EXIT_OK if report.passed else EXIT_MISMATCH)


# ----------------------------------------------------------------------------
# SHOW-CONFIG
# ----------------------------------------------------------------------------
@cli.command("show-config")
def show_config_command() -> None:
    """Mostra la configurazione effettiva."""
    click.echo(json.dumps(_load_manager().show_config(), ensure_ascii=False, indent=2))


if __name__ == "__main__":
    cli()
