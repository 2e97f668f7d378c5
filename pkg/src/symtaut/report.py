"""Text, JSON, CSV and figure rendering for classes, chains and region maps.

All outputs are deterministic byte for byte for a fixed configuration: rows
are emitted in sorted order and the figure backend is configured with a fixed
hash salt and no timestamp metadata.
"""

from __future__ import annotations

import io
import json
from fractions import Fraction
from typing import Optional, Sequence

from . import faces as fc
from .classes import contractibility_index
from .ring import CurveParams, TautClass, normal_form, pretty, to_json_dict

_SVG_HASH_SALT = "symtaut"


def _coords_str(coords) -> str:
    return "(" + ", ".join(str(c) for c in coords) + ")"


def _subspace_rows(space) -> list[list[str]]:
    return [[str(c) for c in row] for row in space.basis]


# ---------------------------------------------------------------------------
# classes


def class_json_dict(cls: TautClass) -> dict:
    data = to_json_dict(cls)
    data["normal_form"] = [str(c) for c in normal_form(cls).coords]
    data["contractibility"] = contractibility_index(cls)
    return data


def class_text(cls: TautClass, header: Optional[str] = None) -> str:
    lines = []
    if header:
        lines.append(header)
    lines.append(f"class: {pretty(cls)}")
    lines.append(f"codim: {cls.codim}  (dimension {cls.ctx.d - cls.codim})")
    lines.append(f"normal form: {_coords_str(normal_form(cls).coords)}")
    lines.append(f"contractibility index: {contractibility_index(cls)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# face chains


def _dual_piece_str(piece: tuple[int, int]) -> str:
    i, m = piece
    return f"theta>={i} in codim {m}"


def chain_json_dict(chain: fc.FaceChain) -> dict:
    return {
        "g": chain.ctx.g,
        "d": chain.ctx.d,
        "n": chain.n,
        "curve": chain.ctx.kind.value,
        "regimes": [tag.value for tag in chain.regimes],
        "primary_regime": chain.primary.value,
        "all_certificates_pass": chain.all_perfect,
        "faces": [
            {
                "r": face.r,
                "dim": face.span.dim,
                "dual_piece": {"i": face.dual_piece[0], "m": face.dual_piece[1]},
                "span_basis": _subspace_rows(face.span),
                "generators": [to_json_dict(gen) for gen in face.generators],
                "certificate": {
                    "span_dim": face.certificate.span_dim,
                    "theta_codim": face.certificate.theta_codim,
                    "generator_count": face.certificate.generator_count,
                    "independent": face.certificate.independent,
                    "generators_in_span": face.certificate.generators_in_span,
                    "perfect": face.certificate.perfect,
                },
            }
            for face in chain.faces
        ],
    }


def chain_text(chain: fc.FaceChain) -> str:
    ctx = chain.ctx
    lines = [
        f"face chain  g={ctx.g} d={ctx.d} n={chain.n}  curve={ctx.kind.value}",
        f"regimes: {', '.join(tag.value for tag in chain.regimes)}"
        f"  (reported: {chain.primary.value})",
    ]
    if not chain.faces:
        lines.append("no non-trivial faces in this regime")
        return "\n".join(lines) + "\n"
    lines.append(" r  dim  dual piece            certificate  generators")
    for face in chain.faces:
        gens = "; ".join(pretty(gen) for gen in face.generators)
        verdict = "PASS" if face.certificate.perfect else "FAIL"
        lines.append(
            f"{face.r:>2}  {face.span.dim:>3}  {_dual_piece_str(face.dual_piece):<20}"
            f"  {verdict:<11}  {gens}"
        )
    return "\n".join(lines) + "\n"


def bounds_json_dict(ctx: CurveParams, n: int) -> dict:
    entries = []
    for r in range(1, min(n, ctx.d - n) + 1):
        lower, upper = fc.dim_bounds(ctx, n, r)
        entries.append({"r": r, "lower": lower, "upper": upper})
    return {
        "g": ctx.g,
        "d": ctx.d,
        "n": n,
        "curve": ctx.kind.value,
        "regimes": [],
        "bounds": entries,
    }


def bounds_text(ctx: CurveParams, n: int) -> str:
    lines = [
        f"no face theorem applies at g={ctx.g} d={ctx.d} n={n}; dimension bounds only",
        " r  lower  upper",
    ]
    rng = range(1, min(n, ctx.d - n) + 1)
    if not rng:
        lines.append("(no admissible indices)")
    for r in rng:
        lower, upper = fc.dim_bounds(ctx, n, r)
        lines.append(f"{r:>2}  {lower:>5}  {upper:>5}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# region maps


_GLYPHS = (
    ("bn_ray_indices", "R"),
    ("bn_dim_g_minus_1", "D"),
    ("subordinate_faces", "S"),
    ("theta_faces", "T"),
    ("nontrivial_aj", "+"),
)

_LEGEND = (
    "legend: R Brill-Noether ray   D dimension g-1 faces   S subordinate faces"
    "\n        T theta faces         + non-trivial faces     . none"
)


def _glyph(cell: fc.RegionCell) -> str:
    for attr, glyph in _GLYPHS:
        if getattr(cell, attr):
            return glyph
    return "."


def region_text(g: int, kind, extent: int, cells: Sequence[fc.RegionCell]) -> str:
    grid = {(c.n, c.m): c for c in cells}
    width = len(str(extent))
    lines = [f"region map  g={g} curve={fc.CurveKind(kind).value} extent={extent}"]
    for m in range(extent, -1, -1):
        row = " ".join(_glyph(grid[(n, m)]) for n in range(extent + 1))
        lines.append(f"m={m:>{width}} | {row}")
    lines.append(" " * (width + 3) + "+" + "-" * (2 * extent + 2))
    axis = " ".join(str(n)[-1] for n in range(extent + 1))
    lines.append(" " * (width + 5) + axis + "   (n, last digit)")
    lines.append(_LEGEND)
    return "\n".join(lines) + "\n"


def region_json_dict(g: int, kind, extent: int, cells: Sequence[fc.RegionCell]) -> dict:
    return {
        "g": g,
        "curve": fc.CurveKind(kind).value,
        "extent": extent,
        "cells": [
            {
                "n": c.n,
                "m": c.m,
                "d": c.d,
                "nontrivial_aj": c.nontrivial_aj,
                "theta_faces": c.theta_faces,
                "subordinate_faces": c.subordinate_faces,
                "bn_ray_indices": list(c.bn_ray_indices),
                "bn_dim_g_minus_1": c.bn_dim_g_minus_1,
                "facet": c.facet,
                "very_general_facet": c.very_general_facet,
            }
            for c in sorted(cells, key=lambda c: (c.n, c.m))
        ],
    }


def region_csv(cells: Sequence[fc.RegionCell]) -> str:
    lines = [
        "n,m,d,nontrivial_aj,theta_faces,subordinate_faces,"
        "bn_ray_indices,bn_dim_g_minus_1,facet,very_general_facet"
    ]
    for c in sorted(cells, key=lambda c: (c.n, c.m)):
        rays = " ".join(str(r) for r in c.bn_ray_indices)
        lines.append(
            f"{c.n},{c.m},{c.d},{int(c.nontrivial_aj)},{int(c.theta_faces)},"
            f"{int(c.subordinate_faces)},{rays},{int(c.bn_dim_g_minus_1)},"
            f"{int(c.facet)},{int(c.very_general_facet)}"
        )
    return "\n".join(lines) + "\n"


def region_figure(g: int, kind, extent: int, cells: Sequence[fc.RegionCell]):
    """Render the region map as a matplotlib figure: shaded cells for the
    face families, thick Brill-Noether line segments and the dimension g-1
    dots, with the very-general boundary dashed."""
    import matplotlib

    matplotlib.use("Agg")
    matplotlib.rcParams["svg.hashsalt"] = _SVG_HASH_SALT
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    fig, ax = plt.subplots(figsize=(7, 7))
    half = 0.5
    for cell in cells:
        if cell.n == 0 or cell.m == 0:
            continue
        color = None
        hatch = None
        if cell.subordinate_faces:
            color = "0.55"
        elif cell.theta_faces:
            color, hatch = "0.78", "//"
        elif cell.nontrivial_aj:
            color = "0.92"
        if color is not None:
            ax.add_patch(
                Rectangle(
                    (cell.n - half, cell.m - half),
                    1,
                    1,
                    facecolor=color,
                    hatch=hatch,
                    edgecolor="none",
                    linewidth=0,
                )
            )
    for r in range(1, g):
        start_n, start_m = r, Fraction(g * r, r + 1)
        end_n, end_m = g - 1, r
        if start_n <= end_n:
            ax.plot(
                [start_n, end_n], [float(start_m), float(end_m)], "k-", linewidth=2.0
            )
    ray_n = [c.n for c in cells if c.bn_ray_indices]
    ray_m = [c.m for c in cells if c.bn_ray_indices]
    if ray_n:
        ax.plot(ray_n, ray_m, "ko", markersize=5, linestyle="none")
    dot_n = [c.n for c in cells if c.bn_dim_g_minus_1]
    dot_m = [c.m for c in cells if c.bn_dim_g_minus_1]
    if dot_n:
        ax.plot(dot_n, dot_m, "k.", markersize=7, linestyle="none")
    ax.plot([0, g], [g, 0], "k--", linewidth=1.0)
    ax.set_xlim(-0.5, extent + 0.5)
    ax.set_ylim(-0.5, extent + 0.5)
    ax.set_xlabel("n (cycle dimension)")
    ax.set_ylabel("m = d - n (codimension)")
    ax.set_title(f"face regions, g={g}, {fc.CurveKind(kind).value}")
    ax.set_aspect("equal")
    fig.tight_layout()
    return fig


def figure_svg_bytes(fig) -> bytes:
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def region_svg(g: int, kind, extent: int, cells: Sequence[fc.RegionCell]) -> bytes:
    import matplotlib.pyplot as plt

    fig = region_figure(g, kind, extent, cells)
    try:
        return figure_svg_bytes(fig)
    finally:
        plt.close(fig)


def to_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"
