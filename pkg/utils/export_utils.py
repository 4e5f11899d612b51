import io
from datetime import datetime
from xml.sax.saxutils import escape

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from utils.traducciones import traducir_check, traducir_suite


def resumen_df(reports):
    """Una fila por suite: checks, fallos, estado y tiempo"""
    filas = []
    for r in reports:
        filas.append({
            'Suite': traducir_suite(r.suite),
            'Cota': r.parameters.get('bound'),
            'ς': r.parameters.get('varsigma'),
            'Checks': len(r.checks),
            'Fallos': r.n_failed,
            'Estado': 'OK' if r.passed else 'FALLA',
            'Tiempo (s)': r.wall_time_s,
        })
    return pd.DataFrame(filas)


def checks_df(report):
    """Checks de una suite, agregados por identidad"""
    df = pd.DataFrame([
        {'id': c.id, 'pass': c.passed, 'params': str(c.params), 'witness': c.witness or ''}
        for c in report.checks
    ], columns=['id', 'pass', 'params', 'witness'])
    if df.empty:
        return df
    agregado = df.groupby('id', sort=False).agg(total=('pass', 'size'), correctos=('pass', 'sum')).reset_index()
    agregado['fallos'] = agregado['total'] - agregado['correctos']
    agregado['id'] = agregado['id'].map(traducir_check)
    return agregado


def _tabla(datos, color, anchos):
    tabla = Table(datos, colWidths=anchos)
    tabla.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor(color)),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 0), (-1, 0), 10),
        ('GRID', (0, 0), (-1, -1), 1, colors.black),
        ('ROWBACKGROUNDS', (0, 1), (-1, -1), [colors.white, colors.lightgrey])
    ]))
    return tabla


def create_pdf_report(reports):
    """
    Genera reporte PDF de una corrida de suites
    """
    buffer = io.BytesIO()

    doc = SimpleDocTemplate(
        buffer,
        pagesize=letter,
        rightMargin=72,
        leftMargin=72,
        topMargin=72,
        bottomMargin=18,
    )

    styles = getSampleStyleSheet()
    title_style = ParagraphStyle(
        'CustomTitle',
        parent=styles['Heading1'],
        fontSize=22,
        textColor=colors.HexColor('#1E40AF'),
        spaceAfter=30,
        alignment=TA_CENTER
    )
    heading_style = ParagraphStyle(
        'CustomHeading',
        parent=styles['Heading2'],
        fontSize=14,
        textColor=colors.HexColor('#1E40AF'),
        spaceAfter=12,
        spaceBefore=12
    )

    story = [Paragraph("Reporte de verificación de ι-potencias divididas", title_style)]
    story.append(Paragraph(
        f"<para align=center>Generado: {datetime.now().strftime('%Y-%m-%d %H:%M')}</para>",
        styles['Normal']
    ))
    story.append(Spacer(1, 20))

    # Resumen
    story.append(Paragraph("Resumen", heading_style))
    resumen = resumen_df(reports)
    datos = [list(resumen.columns)] + resumen.astype(str).values.tolist()
    story.append(_tabla(datos, '#1E40AF', [1.6*inch, 0.6*inch, 1*inch, 0.8*inch, 0.7*inch, 0.8*inch, 0.9*inch]))
    story.append(Spacer(1, 20))

    for r in reports:
        story.append(Paragraph(traducir_suite(r.suite), heading_style))
        detalle = checks_df(r)
        if detalle.empty:
            story.append(Paragraph("Sin checks", styles['Normal']))
            continue
        datos = [['Identidad', 'Total', 'Correctos', 'Fallos']] + detalle.astype(str).values.tolist()
        color = '#10B981' if r.passed else '#DC2626'
        story.append(_tabla(datos, color, [3*inch, 1*inch, 1*inch, 1*inch]))

        # Primeros testigos de fallo
        fallidos = [c for c in r.checks if not c.passed][:5]
        for c in fallidos:
            testigo = (c.witness or '')[:300]
            story.append(Paragraph(f"<b>{escape(c.id)}</b> {escape(str(c.params))}: {escape(testigo)}", styles["Code"]))
        story.append(Spacer(1, 12))

    doc.build(story)
    buffer.seek(0)

    return buffer


def create_excel_report(reports):
    """
    Genera reporte Excel con una hoja de resumen y una hoja por suite
    """
    buffer = io.BytesIO()

    with pd.ExcelWriter(buffer, engine='openpyxl') as writer:
        resumen_df(reports).to_excel(writer, sheet_name='Resumen', index=False)

        for r in reports:
            filas = pd.DataFrame([
                {'id': c.id, 'params': str(c.params), 'pass': c.passed, 'witness': c.witness or ''}
                for c in r.checks
            ], columns=['id', 'params', 'pass', 'witness'])
            filas.to_excel(writer, sheet_name=r.suite[:31], index=False)

            if r.observations:
                obs = pd.DataFrame([{**o.params, **o.profile} for o in r.observations])
                obs.to_excel(writer, sheet_name=f"{r.suite[:24]}-perfil", index=False)

    buffer.seek(0)
    return buffer
