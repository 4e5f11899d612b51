"""
Verificador de ι-potencias divididas del ιgrupo cuántico de rango uno
Autor: cmsr92
Versión: 1.0
CLI para correr las suites, generar tablas de constantes y expandir elementos
"""

import json
import logging
import sys
from pathlib import Path

import click

from algebra.coeff import VarsigmaMode
from algebra.errors import IQuantumError
from utils.config import verificar_cota
from utils.export_utils import create_excel_report, create_pdf_report
from utils.traducciones import traducir_check, traducir_familia, traducir_modo, traducir_suite
from verifier.expand import BASES, FORMAS, expand_comult, expand_idp
from verifier.golden import GOLDEN_DIR, run_golden
from verifier.suites import SUITES, run_all, run_suite
from verifier.tables import FORMATOS, emit_table

logger = logging.getLogger(__name__)

# Nombre en la CLI -> modo interno
MODOS_CLI = {
    'generic': VarsigmaMode.GENERIC,
    'q-inverse': VarsigmaMode.SPECIALIZED,
}

opcion_varsigma = click.option(
    '--varsigma', type=click.Choice(list(MODOS_CLI)), default='generic', show_default=True,
    help='ς simbólico o especializado a q⁻¹',
)


def _configurar_logging(verbose):
    nivel = logging.WARNING
    if verbose == 1:
        nivel = logging.INFO
    elif verbose >= 2:
        nivel = logging.DEBUG
    logging.basicConfig(level=nivel, format='%(asctime)s %(levelname)s %(name)s: %(message)s', force=True)


def _salir_por_error(ctx, e):
    if ctx.obj.get('verbose', 0) >= 2:
        logger.exception("Error del kernel")
    click.echo(f"❌ {type(e).__name__}: {e}", err=True)
    sys.exit(e.codigo_salida)


@click.group()
@click.option('-v', '--verbose', count=True, help='-v para INFO, -vv para DEBUG')
@click.pass_context
def cli(ctx, verbose):
    """Kernel exacto de ι-potencias divididas: verificación, tablas y expansión."""
    ctx.ensure_object(dict)
    ctx.obj['verbose'] = verbose
    _configurar_logging(verbose)


@cli.command()
@click.argument('suite', type=click.Choice(list(SUITES) + ['all']))
@click.option('--max', 'cota', type=int, default=None, help='Cota de la suite (por defecto la de la suite)')
@opcion_varsigma
@click.option('--json', 'json_path', type=click.Path(dir_okay=False), default=None, help='Escribe el reporte JSON')
@click.option('--workers', type=int, default=None, help='Procesos en paralelo (IDP_WORKERS)')
@click.option('--pdf', 'pdf_path', type=click.Path(dir_okay=False), default=None, help='Reporte PDF')
@click.option('--xlsx', 'xlsx_path', type=click.Path(dir_okay=False), default=None, help='Libro Excel')
@click.pass_context
def verify(ctx, suite, cota, varsigma, json_path, workers, pdf_path, xlsx_path):
    """Corre una suite (o todas) y sale con 0 si todos los checks pasan."""
    modo = MODOS_CLI[varsigma]
    try:
        if suite == 'all':
            reportes = run_all(cota, modo, workers)
        else:
            reportes = [run_suite(suite, cota, modo, workers)]
    except IQuantumError as e:
        _salir_por_error(ctx, e)

    for r in reportes:
        icono = '✅' if r.passed else '❌'
        click.echo(f"{icono} {traducir_suite(r.suite)}: {len(r.checks) - r.n_failed}/{len(r.checks)} checks "
                   f"(cota {r.parameters['bound']}, {traducir_modo(r.parameters['varsigma'])}, {r.wall_time_s}s)")
        for c in r.checks:
            if not c.passed:
                click.echo(f"   ❌ {traducir_check(c.id)} {c.params}: {c.witness}")

    if json_path:
        if len(reportes) == 1:
            texto = reportes[0].to_json()
        else:
            texto = json.dumps(
                [r.model_dump(mode='json', by_alias=True, exclude_none=True) for r in reportes],
                ensure_ascii=False, indent=2,
            )
        Path(json_path).write_text(texto, encoding='utf-8')
        click.echo(f"📄 Reporte JSON en {json_path}")
    if pdf_path:
        Path(pdf_path).write_bytes(create_pdf_report(reportes).getvalue())
        click.echo(f"📄 Reporte PDF en {pdf_path}")
    if xlsx_path:
        Path(xlsx_path).write_bytes(create_excel_report(reportes).getvalue())
        click.echo(f"📊 Libro Excel en {xlsx_path}")

    sys.exit(0 if all(r.passed for r in reportes) else 1)


@cli.command()
@click.option('--family', type=click.Choice(['ev', 'odd']), required=True)
@click.option('--max', 'max_total', type=int, required=True, help='Grado total máximo m + n')
@click.option('--format', 'formato', type=click.Choice(list(FORMATOS)), default='csv', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Archivo de salida (stdout si falta)')
@opcion_varsigma
@click.pass_context
def table(ctx, family, max_total, formato, out, varsigma):
    """Tabla de constantes de estructura de B^(m)·B^(n)."""
    if formato == 'xlsx' and out is None:
        raise click.UsageError("el formato xlsx requiere --out")
    if max_total < 0:
        raise click.UsageError("--max debe ser >= 0")
    try:
        texto = emit_table(family, max_total, formato, MODOS_CLI[varsigma], out)
    except IQuantumError as e:
        _salir_por_error(ctx, e)

    if out is None:
        click.echo(texto.rstrip('\n'))
    else:
        click.echo(f"✅ Tabla {traducir_familia(family)} escrita en {out}", err=True)


@cli.command()
@click.argument('objeto', type=click.Choice(['idp', 'comult']))
@click.option('--family', type=click.Choice(['ev', 'odd']), required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--basis', type=click.Choice(list(BASES)), default='B', show_default=True)
@click.option('--form', 'forma', type=click.Choice(list(FORMAS)), default='theorem', show_default=True)
@opcion_varsigma
@click.pass_context
def expand(ctx, objeto, family, n, basis, forma, varsigma):
    """Imprime B^(n) o Δ(B^(n)) en la gramática canónica."""
    modo = MODOS_CLI[varsigma]
    try:
        verificar_cota(n)
        if objeto == 'idp':
            texto = expand_idp(family, n, basis, modo)
        else:
            texto = expand_comult(family, n, forma, modo)
    except IQuantumError as e:
        _salir_por_error(ctx, e)
    click.echo(texto)


@cli.command()
@click.option('--dir', 'directorio', type=click.Path(exists=True, file_okay=False), default=str(GOLDEN_DIR),
              show_default=True)
@opcion_varsigma
@click.pass_context
def golden(ctx, directorio, varsigma):
    """Regenera los ejemplos dorados y los compara con las fórmulas."""
    try:
        reporte = run_golden(directorio, MODOS_CLI[varsigma])
    except IQuantumError as e:
        _salir_por_error(ctx, e)

    if not reporte:
        click.echo(f"⚠️ No hay archivos JSON en {directorio}")
    todo_ok = True
    for archivo, checks in reporte.items():
        fallos = [c for c in checks if not c.passed]
        todo_ok = todo_ok and not fallos
        click.echo(f"{'✅' if not fallos else '❌'} {archivo}: {len(checks) - len(fallos)}/{len(checks)}")
        for c in fallos:
            click.echo(f"   ❌ {traducir_check(c.id)} {c.params}: {c.witness}")
    sys.exit(0 if todo_ok else 1)


if __name__ == '__main__':
    cli()
