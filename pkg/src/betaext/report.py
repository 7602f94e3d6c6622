"""Deterministic CSV table / plot-data generation, plus figure rendering.

Cell semantics: every value column carries a sibling ``<col>_status`` column
with one of ok, domain_error, undefined_term, budget_exceeded; a non-ok
status leaves the value field empty.  Numbers are written with 12
significant digits, '.' decimal point, ',' separators and '\n' line
endings, so identical requests produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, DomainError, QuadratureError
from .extended import ext_beta, naive_series_partial_sums
from .modified import modified_beta_quad, modified_beta_series
from .special import beta_classical

__all__ = [
    "TableRequest",
    "CsvCell",
    "generate_table",
    "generate_plotdata",
    "rows_to_csv",
    "render_figure",
]

COLUMN_KINDS = ("classical", "extended_p", "mecbf")
ENGINES = ("series", "quadrature")


@dataclass(frozen=True)
class CsvCell:
    """A table cell: a value when status is ok, empty otherwise."""

    value: float | None
    status: str = "ok"

    def __post_init__(self):
        if self.status == "ok" and self.value is None:
            raise ValueError("ok cells need a value")
        if self.status != "ok" and self.value is not None:
            raise ValueError("non-ok cells must not carry a value")


@dataclass(frozen=True)
class TableRequest:
    """Grid specification for ``generate_table``.

    The y coordinate either follows x (fixed_y None, the diagonal
    convention) or stays constant.  ``p_values`` parameterize the
    decaying-kernel columns, ``m_values`` the bounded-kernel columns.
    """

    x_start: float = 0.0
    x_stop: float = 10.0
    x_step: float = 1.0
    fixed_y: float | None = None
    columns: tuple[str, ...] = COLUMN_KINDS
    p_values: tuple[float, ...] = (0.01, 0.0)
    m_values: tuple[float, ...] = (0.01, 0.0)
    engine: str = "series"
    series_n_max: int = 5

    def __post_init__(self):
        if self.x_step <= 0:
            raise ValueError("x_step must be positive")
        if self.x_start > self.x_stop:
            raise ValueError("x_start must not exceed x_stop")
        if not self.columns:
            raise ValueError("at least one column kind is required")
        for c in self.columns:
            if c not in COLUMN_KINDS:
                raise ValueError(f"unknown column kind {c!r}")
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")
        if self.series_n_max < 0:
            raise ValueError("series_n_max must be >= 0")

    def x_values(self) -> list[float]:
        count = int(round((self.x_stop - self.x_start) / self.x_step)) + 1
        return [self.x_start + i * self.x_step for i in range(count)]


def _fmt(v: float) -> str:
    if v == 0.0:
        v = 0.0  # normalizes -0.0
    return format(float(v), ".12g")


def _classical_cell(x: float, y: float) -> CsvCell:
    try:
        return CsvCell(beta_classical(x, y))
    except DomainError:
        return CsvCell(None, "domain_error")


def _extended_series_cell(x: float, y: float, p: float, n_max: int) -> CsvCell:
    # Faithful to the truncated termwise expansion: the cell exists only
    # when every term up to n_max does.
    rows = naive_series_partial_sums(x, y, p, n_max)
    if not all(r.defined for r in rows):
        return CsvCell(None, "undefined_term")
    return CsvCell(rows[-1].partial_sum)


def _extended_quad_cell(x: float, y: float, p: float) -> CsvCell:
    try:
        return CsvCell(ext_beta(x, y, p).value)
    except BudgetExceeded:
        return CsvCell(None, "budget_exceeded")
    except (DomainError, QuadratureError):
        return CsvCell(None, "domain_error")


def _modified_cell(x: float, y: float, m: float, engine: str) -> CsvCell:
    try:
        if engine == "series":
            res, _ = modified_beta_series(x, y, m)
        else:
            res = modified_beta_quad(x, y, m)
        return CsvCell(res.value)
    except BudgetExceeded:
        return CsvCell(None, "budget_exceeded")
    except (DomainError, QuadratureError):
        return CsvCell(None, "domain_error")


def generate_table(req: TableRequest) -> tuple[list[str], list[list]]:
    """(header, rows) for the requested comparison grid.

    Column names follow the B / EB / MB convention tagged with the kernel
    parameter and the evaluation route.
    """
    header: list[str] = ["x", "y"]
    specs: list[tuple] = []
    for kind in req.columns:
        if kind == "classical":
            header += ["B", "B_status"]
            specs.append(("classical", None))
        elif kind == "extended_p":
            for p in req.p_values:
                base = f"EB_p{p:g}"
                header += [f"{base}_series{req.series_n_max}",
                           f"{base}_series{req.series_n_max}_status"]
                specs.append(("ext_series", p))
                header += [f"{base}_quad", f"{base}_quad_status"]
                specs.append(("ext_quad", p))
        else:
            for m in req.m_values:
                name = f"MB_m{m:g}_{req.engine}"
                header += [name, f"{name}_status"]
                specs.append(("modified", m))

    rows = []
    for x in req.x_values():
        y = x if req.fixed_y is None else req.fixed_y
        row: list = [x, y]
        for kind, param in specs:
            if kind == "classical":
                cell = _classical_cell(x, y)
            elif kind == "ext_series":
                cell = _extended_series_cell(x, y, param, req.series_n_max)
            elif kind == "ext_quad":
                cell = _extended_quad_cell(x, y, param)
            else:
                cell = _modified_cell(x, y, param, req.engine)
            row.append(cell)
        rows.append(row)
    return header, rows


FIGURES = ("fig1", "fig2", "fig3")


def generate_plotdata(
    figure: str,
    *,
    x: float = 2.0,
    y: float = 2.0,
) -> tuple[list[str], list[list[float]]]:
    """Curve/surface points for the three standard views.

    fig1: B(x, 1; m) for x in (0, 1], one curve per m in -2..2;
    fig2: the surface B(x, y; 2) on the integer grid x, y in 1..25;
    fig3: B(x, y; m) at fixed shapes for m = -2 : 0.5 : 2.
    """
    if figure == "fig1":
        header = ["x", "m", "value"]
        rows = []
        for m in (-2.0, -1.0, 0.0, 1.0, 2.0):
            for i in range(1, 21):
                xi = 0.05 * i
                res, _ = modified_beta_series(xi, 1.0, m)
                rows.append([xi, m, res.value])
        return header, rows
    if figure == "fig2":
        header = ["x", "y", "m", "value"]
        rows = []
        for xi in range(1, 26):
            for yi in range(1, 26):
                res, _ = modified_beta_series(float(xi), float(yi), 2.0)
                rows.append([float(xi), float(yi), 2.0, res.value])
        return header, rows
    if figure == "fig3":
        header = ["x", "y", "m", "value"]
        rows = []
        for i in range(9):
            m = -2.0 + 0.5 * i
            res, _ = modified_beta_series(x, y, m)
            rows.append([x, y, m, res.value])
        return header, rows
    raise ValueError(f"unknown figure {figure!r}; choose from {FIGURES}")


def rows_to_csv(header: list[str], rows: list[list]) -> str:
    """Serialize with the fixed formatting contract (UTF-8 text)."""
    lines = [",".join(header)]
    for row in rows:
        fields = []
        for item in row:
            if isinstance(item, CsvCell):
                fields.append(_fmt(item.value) if item.status == "ok" else "")
                fields.append(item.status)
            else:
                fields.append(_fmt(item))
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def render_figure(figure: str, header: list[str], rows: list[list[float]], path: str) -> None:
    """Render the plot-data rows to an image file next to the CSV."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    if figure == "fig1":
        by_m: dict[float, tuple[list[float], list[float]]] = {}
        for xi, m, v in rows:
            by_m.setdefault(m, ([], []))
            by_m[m][0].append(xi)
            by_m[m][1].append(v)
        for m in sorted(by_m):
            xs, vs = by_m[m]
            ax.plot(xs, vs, marker=".", label=f"m = {m:g}")
        ax.set_xlabel("x")
        ax.set_ylabel("B(x, 1; m)")
        ax.set_yscale("log")
        ax.legend()
    elif figure == "fig2":
        import numpy as np
        from matplotlib.colors import LogNorm

        xs = sorted({r[0] for r in rows})
        ys = sorted({r[1] for r in rows})
        grid = np.empty((len(ys), len(xs)))
        for xi, yi, _, v in rows:
            grid[ys.index(yi), xs.index(xi)] = v
        mesh = ax.pcolormesh(xs, ys, grid, norm=LogNorm(), shading="auto")
        fig.colorbar(mesh, ax=ax, label="B(x, y; 2)")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
    elif figure == "fig3":
        ms = [r[2] for r in rows]
        vs = [r[3] for r in rows]
        ax.plot(ms, vs, marker="o")
        ax.set_xlabel("m")
        ax.set_ylabel(f"B({rows[0][0]:g}, {rows[0][1]:g}; m)")
    else:
        raise ValueError(f"unknown figure {figure!r}")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
