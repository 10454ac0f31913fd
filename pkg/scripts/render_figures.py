#!/usr/bin/env python3
"""Render every built-in figure to SVG files.

Usage: python3 scripts/render_figures.py [OUTDIR]   (default: ./figures)
"""

import sys
from pathlib import Path

from exactplane import FIGURES, render_figure


def main() -> int:
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
    out.mkdir(parents=True, exist_ok=True)
    for name in sorted(FIGURES):
        path = out / f"{name}.svg"
        path.write_text(render_figure(name), encoding="utf-8")
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
