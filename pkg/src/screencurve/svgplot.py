"""Deterministic SVG rendering of the screening plane.

The plane is the unit square with prevalence phi on the horizontal axis and
predictive value rho(phi) on the vertical axis (inverted into pixel space).
Rendering is a pure function of the plot specification: fixed element
order, fixed 2-decimal pixel formatting, a fixed color palette keyed by
entry order, and no timestamps or external references, so identical specs
produce byte-identical documents.

Optional per-test overlays:

* threshold: vertical line at phi_e with dashed guides to the axes;
* chords: the origin chord (0,0)->(phi_e, rho_e) and the endpoint chord
  (phi_e, rho_e)->(1,1);
* beta: the origin chord plus an angle arc at the origin between the chord
  and the vertical, labeled beta.

An overlay that is undefined for a degenerate test is skipped and recorded
as an XML comment warning near the top of the document; the curve itself is
still drawn from its defined samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import CatalogEntry
from .core import curve_samples
from .errors import DegenerateTestError, ParameterError
from .geometry import beta_geometry, prevalence_threshold

__all__ = ["PALETTE", "PlotSpec", "render_screening_plane"]

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#8c564b",
    "#17becf",
    "#7f7f7f",
)

_MARGIN_LEFT = 62.0
_MARGIN_RIGHT = 20.0
_MARGIN_TOP = 20.0
_MARGIN_BOTTOM = 48.0
_ARC_RADIUS = 44.0


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: named tests, sample count, overlay switches, pixel size."""

    entries: tuple[CatalogEntry, ...]
    samples: int = 257
    show_threshold: bool = False
    show_beta: bool = False
    show_chords: bool = False
    width_px: int = 640
    height_px: int = 640

    def __post_init__(self) -> None:
        if not self.entries:
            raise ParameterError("a plot needs at least one catalog entry")
        if not isinstance(self.samples, int) or self.samples < 2:
            raise ParameterError(f"samples must be an integer >= 2, got {self.samples!r}")
        minimum_w = int(_MARGIN_LEFT + _MARGIN_RIGHT) + 40
        minimum_h = int(_MARGIN_TOP + _MARGIN_BOTTOM) + 40
        if not isinstance(self.width_px, int) or self.width_px < minimum_w:
            raise ParameterError(f"width_px must be an integer >= {minimum_w}")
        if not isinstance(self.height_px, int) or self.height_px < minimum_h:
            raise ParameterError(f"height_px must be an integer >= {minimum_h}")


def _xml_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _comment_safe(text: str) -> str:
    while "--" in text:
        text = text.replace("--", "-")
    return text


def render_screening_plane(spec: PlotSpec) -> str:
    """Render the plane described by ``spec`` to a standalone SVG 1.1 document."""
    plot_w = spec.width_px - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = spec.height_px - _MARGIN_TOP - _MARGIN_BOTTOM

    def x(phi: float) -> float:
        return _MARGIN_LEFT + phi * plot_w

    def y(rho: float) -> float:
        return _MARGIN_TOP + (1.0 - rho) * plot_h

    def px(value: float) -> str:
        return f"{value:.2f}"

    warnings: list[str] = []
    body: list[str] = []

    body.append(
        f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" '
        'fill="#ffffff"/>'
    )

    # Grid, frame, ticks.
    body.append('<g class="grid" stroke="#dddddd" stroke-width="1">')
    for k in range(1, 5):
        t = k / 5.0
        body.append(
            f'<line x1="{px(x(t))}" y1="{px(y(0.0))}" x2="{px(x(t))}" y2="{px(y(1.0))}"/>'
        )
        body.append(
            f'<line x1="{px(x(0.0))}" y1="{px(y(t))}" x2="{px(x(1.0))}" y2="{px(y(t))}"/>'
        )
    body.append("</g>")
    body.append(
        f'<rect class="frame" x="{px(x(0.0))}" y="{px(y(1.0))}" '
        f'width="{px(plot_w)}" height="{px(plot_h)}" fill="none" '
        'stroke="#333333" stroke-width="1"/>'
    )
    body.append('<g class="ticks" font-family="sans-serif" font-size="12" fill="#333333">')
    for k in range(6):
        t = k / 5.0
        body.append(
            f'<text x="{px(x(t))}" y="{px(y(0.0) + 16.0)}" text-anchor="middle">{t:.1f}</text>'
        )
        body.append(
            f'<text x="{px(x(0.0) - 8.0)}" y="{px(y(t) + 4.0)}" text-anchor="end">{t:.1f}</text>'
        )
    body.append("</g>")
    body.append('<g class="axis-labels" font-family="sans-serif" font-size="14" fill="#000000">')
    body.append(
        f'<text x="{px(x(0.5))}" y="{px(spec.height_px - 10.0)}" text-anchor="middle">'
        "prevalence φ</text>"
    )
    label_x = 16.0
    label_y = y(0.5)
    body.append(
        f'<text x="{px(label_x)}" y="{px(label_y)}" text-anchor="middle" '
        f'transform="rotate(-90 {px(label_x)} {px(label_y)})">'
        "positive predictive value ρ(φ)</text>"
    )
    body.append("</g>")

    # Curves.
    body.append('<g class="curves" fill="none" stroke-width="1.5">')
    for i, entry in enumerate(spec.entries):
        color = PALETTE[i % len(PALETTE)]
        segments: list[list[str]] = [[]]
        for point in curve_samples(entry.test, spec.samples):
            if point.rho is None:
                if segments[-1]:
                    segments.append([])
                continue
            segments[-1].append(f"{px(x(point.phi))},{px(y(point.rho))}")
        drawn = 0
        for segment in segments:
            if len(segment) < 2:
                continue
            suffix = "" if drawn == 0 else f"-s{drawn}"
            body.append(
                f'<polyline class="curve" id="curve-{i}{suffix}" '
                f'data-name="{_xml_escape(entry.name)}" stroke="{color}" '
                f'points="{" ".join(segment)}"/>'
            )
            drawn += 1
    body.append("</g>")

    # Overlays, per entry, fixed order: threshold, chords, beta.
    def warn(overlay: str, entry: CatalogEntry, exc: Exception) -> None:
        # Entities are not parsed inside XML comments; only "--" is forbidden.
        warnings.append(
            f"<!-- warning: {overlay} overlay skipped for "
            f"{_comment_safe(entry.name)}: {_comment_safe(str(exc))} -->"
        )

    body.append('<g class="overlays" font-family="sans-serif" font-size="13">')
    for i, entry in enumerate(spec.entries):
        color = PALETTE[i % len(PALETTE)]
        threshold = None
        if spec.show_threshold or spec.show_chords:
            try:
                threshold = prevalence_threshold(entry.test)
            except DegenerateTestError as exc:
                if spec.show_threshold:
                    warn("threshold", entry, exc)
                if spec.show_chords:
                    warn("chords", entry, exc)
        if spec.show_threshold and threshold is not None:
            tx, ty = x(threshold.phi_e), y(threshold.rho_e)
            body.append(
                f'<line class="threshold" stroke="{color}" stroke-dasharray="5 3" '
                f'x1="{px(tx)}" y1="{px(y(0.0))}" x2="{px(tx)}" y2="{px(ty)}"/>'
            )
            body.append(
                f'<line class="threshold-guide" stroke="{color}" stroke-dasharray="5 3" '
                f'x1="{px(x(0.0))}" y1="{px(ty)}" x2="{px(tx)}" y2="{px(ty)}"/>'
            )
            body.append(
                f'<text class="threshold-label" fill="{color}" '
                f'x="{px(tx + 4.0)}" y="{px(y(0.0) - 6.0)}">φ_e</text>'
            )
        if spec.show_chords and threshold is not None:
            tx, ty = x(threshold.phi_e), y(threshold.rho_e)
            body.append(
                f'<line class="origin-chord" stroke="{color}" stroke-width="1" '
                f'x1="{px(x(0.0))}" y1="{px(y(0.0))}" x2="{px(tx)}" y2="{px(ty)}"/>'
            )
            body.append(
                f'<line class="endpoint-chord" stroke="{color}" stroke-width="1" '
                f'x1="{px(tx)}" y1="{px(ty)}" x2="{px(x(1.0))}" y2="{px(y(1.0))}"/>'
            )
        if spec.show_beta:
            try:
                angle = beta_geometry(entry.test)
                anchor = prevalence_threshold(entry.test)
            except DegenerateTestError as exc:
                warn("beta", entry, exc)
            else:
                ox, oy = x(0.0), y(0.0)
                tx, ty = x(anchor.phi_e), y(anchor.rho_e)
                if not spec.show_chords:
                    body.append(
                        f'<line class="origin-chord" stroke="{color}" stroke-width="1" '
                        f'x1="{px(ox)}" y1="{px(oy)}" x2="{px(tx)}" y2="{px(ty)}"/>'
                    )
                # Angle arc at the origin, from the chord direction up to the
                # vertical axis, drawn in pixel space.
                dx, dy = tx - ox, ty - oy
                norm = math.hypot(dx, dy)
                sx = ox + _ARC_RADIUS * dx / norm
                sy = oy + _ARC_RADIUS * dy / norm
                ex, ey = ox, oy - _ARC_RADIUS
                body.append(
                    f'<path class="beta-arc" fill="none" stroke="{color}" '
                    f'stroke-width="1" d="M {px(sx)} {px(sy)} '
                    f'A {px(_ARC_RADIUS)} {px(_ARC_RADIUS)} 0 0 0 {px(ex)} {px(ey)}"/>'
                )
                chord_angle = math.atan2(dy, dx)
                mid_angle = 0.5 * (chord_angle + (-math.pi / 2.0))
                lx = ox + (_ARC_RADIUS + 14.0) * math.cos(mid_angle)
                ly = oy + (_ARC_RADIUS + 14.0) * math.sin(mid_angle)
                body.append(
                    f'<text class="beta-label" fill="{color}" text-anchor="middle" '
                    f'x="{px(lx)}" y="{px(ly + 4.0)}">β</text>'
                )
    body.append("</g>")

    # Legend, entry order, top-left corner of the plot box.
    body.append('<g class="legend" font-family="sans-serif" font-size="13">')
    for i, entry in enumerate(spec.entries):
        color = PALETTE[i % len(PALETTE)]
        ly = _MARGIN_TOP + 16.0 + 18.0 * i
        lx = _MARGIN_LEFT + 12.0
        body.append(
            f'<line x1="{px(lx)}" y1="{px(ly - 4.0)}" x2="{px(lx + 24.0)}" '
            f'y2="{px(ly - 4.0)}" stroke="{color}" stroke-width="2"/>'
        )
        body.append(
            f'<text x="{px(lx + 30.0)}" y="{px(ly)}" fill="#000000">'
            f"{_xml_escape(entry.name)}</text>"
        )
    body.append("</g>")

    document = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width_px}" height="{spec.height_px}" '
        f'viewBox="0 0 {spec.width_px} {spec.height_px}">',
        "<title>screening plane: predictive value versus prevalence</title>",
        *warnings,
        *body,
        "</svg>",
    ]
    return "\n".join(document) + "\n"
