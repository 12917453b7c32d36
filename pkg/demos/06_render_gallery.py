"""Render the preset gallery, the evolution sequence, and k-part variants.

Writes SVG files into demos/output/.  The `turn` knob sweeps the symbol
family continuously: small turns give the gently curved classical look,
turn=1 the canonical one-turn spiral, turn=2 the tightly wound variant.
"""

from dataclasses import replace
from pathlib import Path

from yinyang.render import EVOLUTION_TURNS, RENDER_PRESETS, RenderConfig, render

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

for name, config in RENDER_PRESETS.items():
    path = out_dir / f"preset_{name}.svg"
    render(config).write(path)
    print("wrote", path)

for label, turn in zip("abcd", EVOLUTION_TURNS):
    path = out_dir / f"evolution_{label}_turn{turn:g}.svg"
    render(RenderConfig(turn=turn)).write(path)
    print("wrote", path)

for parts in (3, 4):
    path = out_dir / f"kpartite_{parts}.svg"
    render(RenderConfig(parts=parts)).write(path)
    print("wrote", path)

mirrored = replace(RENDER_PRESETS["classic"], clockwise=False)
path = out_dir / "classic_mirrored.svg"
render(mirrored).write(path)
print("wrote", path)
