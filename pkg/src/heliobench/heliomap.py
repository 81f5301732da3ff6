"""Heliocentric clockwise maps.

The reference category sits at the center; each similar category is a dot
whose distance from the center grows affinely with its information gain
(closer = more similar) and whose clockwise position, starting at the top,
follows an externally supplied prestige order when one is given, or
ascending gain otherwise. Rendering produces a self-contained, byte-stable
SVG document.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .benchmark import BenchmarkResult
from .errors import InvalidInputError

DEFAULT_R_MIN = 0.15
DEFAULT_R_MAX = 1.0


@dataclass(frozen=True)
class PrestigeOrder:
    """Category names ordered from highest prestige down, from an external
    ranking file. Never computed here."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InvalidInputError("prestige order contains duplicate names")

    def rank(self, name: str) -> int | None:
        try:
            return self.names.index(name)
        except ValueError:
            return None


def parse_prestige_order(text: str) -> PrestigeOrder:
    """One category per line, best first; blank lines and # comments skipped."""
    names = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        names.append(line)
    return PrestigeOrder(tuple(names))


def load_prestige_order(path: str | Path) -> PrestigeOrder:
    return parse_prestige_order(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class HelioDot:
    label: str
    angle_degrees: float
    radius_fraction: float
    gain: float


@dataclass(frozen=True)
class HelioLayout:
    center_label: str
    dots: tuple[HelioDot, ...]
    r_min: float = DEFAULT_R_MIN
    r_max: float = DEFAULT_R_MAX


def layout_map(
    result: BenchmarkResult,
    order: PrestigeOrder | None = None,
    r_min: float = DEFAULT_R_MIN,
    r_max: float = DEFAULT_R_MAX,
) -> HelioLayout:
    """Place one dot per ranking entry of an (already truncated) result.

    Dot i of n sits at 90 - i * 360/n degrees, i.e. clockwise from the top.
    Radius encodes gain affinely between r_min and r_max; when all gains
    are equal every dot sits at r_min.
    """
    if not result.ranking:
        raise InvalidInputError("cannot lay out an empty ranking")
    if not 0 <= r_min <= r_max:
        raise InvalidInputError(f"need 0 <= r_min <= r_max, got {r_min}, {r_max}")

    entries = list(result.ranking)
    if order is not None:
        ranked = [e for e in entries if order.rank(e[0]) is not None]
        ranked.sort(key=lambda e: order.rank(e[0]))
        unranked = [e for e in entries if order.rank(e[0]) is None]
        unranked.sort(key=lambda e: (e[1], e[0]))
        entries = ranked + unranked

    gains = [g for _, g in entries]
    g_min, g_max = min(gains), max(gains)
    step = 360.0 / len(entries)
    dots = []
    for i, (name, gain) in enumerate(entries):
        if g_max == g_min:
            radius = r_min
        else:
            # unit ratio first: (gain - g_min) / (g_max - g_min) is in [0, 1]
            # exactly, which keeps the radius inside [r_min, r_max]
            radius = r_min + (r_max - r_min) * ((gain - g_min) / (g_max - g_min))
        dots.append(
            HelioDot(
                label=name,
                angle_degrees=90.0 - i * step,
                radius_fraction=radius,
                gain=gain,
            )
        )
    return HelioLayout(
        center_label=result.reference, dots=tuple(dots), r_min=r_min, r_max=r_max
    )


@dataclass(frozen=True)
class MapStyle:
    """Rendering options; defaults give an 800 x 800 unit canvas."""

    size: float = 800.0
    outer_pad: float = 110.0  # canvas space kept free for labels
    ring_fractions: tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)
    dot_radius: float = 5.0
    font_family: str = "Helvetica, Arial, sans-serif"
    font_size: float = 11.0
    center_font_size: float = 13.0
    label_offset: float = 12.0
    background: str = "#ffffff"
    dot_color: str = "#1f5fa8"
    ring_color: str = "#cccccc"
    text_color: str = "#222222"


DEFAULT_STYLE = MapStyle()


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(layout: HelioLayout, style: MapStyle = DEFAULT_STYLE) -> str:
    """Render a layout to SVG text. A pure function: identical inputs give
    byte-identical output."""
    cx = cy = style.size / 2.0
    plot_radius = style.size / 2.0 - style.outer_pad

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(style.size)}" '
        f'height="{_fmt(style.size)}" viewBox="0 0 {_fmt(style.size)} {_fmt(style.size)}" '
        f'font-family="{escape(style.font_family)}">',
        f'<rect class="background" width="{_fmt(style.size)}" height="{_fmt(style.size)}" '
        f'fill="{style.background}"/>',
    ]

    for frac in style.ring_fractions:
        lines.append(
            f'<circle class="ring" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(plot_radius * frac)}" fill="none" stroke="{style.ring_color}" '
            f'stroke-width="1"/>'
        )

    lines.append(
        f'<circle class="center" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
        f'r="{_fmt(style.dot_radius + 2.0)}" fill="{style.text_color}"/>'
    )
    lines.append(
        f'<text class="center-label" x="{_fmt(cx)}" y="{_fmt(cy + style.dot_radius + 2.0 + style.center_font_size + 4.0)}" '
        f'text-anchor="middle" font-size="{_fmt(style.center_font_size)}" '
        f'font-weight="bold" fill="{style.text_color}">{escape(layout.center_label)}</text>'
    )

    for i, dot in enumerate(layout.dots):
        theta = math.radians(dot.angle_degrees)
        r_px = plot_radius * dot.radius_fraction
        x = cx + r_px * math.cos(theta)
        y = cy - r_px * math.sin(theta)
        lines.append(
            f'<circle class="dot" cx="{_fmt(x)}" cy="{_fmt(y)}" '
            f'r="{_fmt(style.dot_radius)}" fill="{style.dot_color}"/>'
        )
        # Labels alternate outward/inward of the dot by index parity to
        # reduce collisions between angular neighbours.
        side = 1.0 if i % 2 == 0 else -1.0
        label_r = r_px + side * (style.dot_radius + style.label_offset)
        lx = cx + label_r * math.cos(theta)
        ly = cy - label_r * math.sin(theta) + style.font_size / 3.0
        lines.append(
            f'<text class="dot-label" x="{_fmt(lx)}" y="{_fmt(ly)}" text-anchor="middle" '
            f'font-size="{_fmt(style.font_size)}" fill="{style.text_color}">'
            f"{escape(dot.label)}</text>"
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
