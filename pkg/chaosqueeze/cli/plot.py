"""
Gnuplot scripts rendering the CSV exports. Scripts are written next to the data and produce a PNG image when run with
``gnuplot <script>``.
"""

import enum
import os

from chaosqueeze.errors import OutputError
from chaosqueeze.object import SQUEEZING_THRESHOLD


class PlotKind(enum.Enum):
    Trajectory = "trajectory"
    Sweep = "sweep"
    Intervals = "intervals"
    Poincare = "poincare"


_PREAMBLE = """\
set datafile separator ','
set key autotitle columnhead
set terminal pngcairo size 1000,650
set output '%(image)s'
set grid
"""

_TEMPLATES = {
    PlotKind.Trajectory: """\
set xlabel 'tau'
set ylabel 'S'
plot '%(data)s' using (column('tau')):(column('S')) with lines lw 2 title 'S(tau)', \\
     %(threshold)r with lines dashtype 2 lc rgb 'black' title 'S = %(threshold)g'
""",
    PlotKind.Sweep: """\
set xlabel '%(axis)s'
set ylabel 'S_min'
set y2label 'd'
set logscale y
set logscale y2
set ytics nomirror
set y2tics
plot '%(data)s' using (column('%(axis)s')):(column('s_min')) with linespoints pt 7 title 'S_min', \\
     '' using (column('%(axis)s')):(column('d_end')) axes x1y2 with linespoints pt 5 title 'd'
""",
    PlotKind.Intervals: """\
set xlabel 'tau'
unset ytics
set yrange [0:2]
plot '%(data)s' using (column('tau_start')):(1):(column('length')):(0) \\
     with vectors nohead lw 12 title 'S < %(threshold)g'
""",
    PlotKind.Poincare: """\
set xlabel 'x'
set ylabel 'p'
set xrange [0:2*pi]
plot '%(data)s' using (column('x')):(column('p')) with points pt 7 ps 0.3 title 'stroboscopic section'
""",
}


def emit_plot_script(kind: PlotKind, data_path: str, out_path: str, axis: str = "g") -> str:
    """
    Writes the gnuplot script rendering ``data_path`` to ``out_path``, and returns its text.

    :param axis: the scanned column of a sweep file, ``g`` or ``omega``.
    :raises OutputError: if the data file does not exist or the script cannot be written.
    """

    if not os.path.isfile(data_path):
        raise OutputError(f"cannot plot {data_path}: no such data file.")

    image = os.path.splitext(out_path)[0] + ".png"

    substitutions = {
        "data": _quoted(data_path),
        "image": _quoted(image),
        "axis": axis,
        "threshold": SQUEEZING_THRESHOLD,
    }

    script = (_PREAMBLE + _TEMPLATES[kind]) % substitutions

    try:
        with open(out_path, "w", encoding="utf-8") as file:
            file.write(script)
    except OSError as e:
        raise OutputError(f"cannot write {out_path}: {e}") from e

    return script


def _quoted(path: str) -> str:
    # Gnuplot single-quoted strings escape quotes by doubling them.
    return path.replace("'", "''")
