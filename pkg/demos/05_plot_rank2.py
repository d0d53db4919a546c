# %% [markdown]
# # Drawing a rank-2 polygon
#
# For rank 2 the polytope is a polygon. The SVG marks good points in red,
# labelled by degree, and the remaining lattice points in grey.

# %%
import sys
from pathlib import Path

from thedron import canonical_form, h_description, parse_presentation, polygon_vertices, render_rank2_svg

P = parse_presentation(Path(__file__).with_name("data").joinpath("golden.json").read_text())
_, T = canonical_form(P)
print("vertices", polygon_vertices(h_description(T)))

out = Path(sys.argv[1] if len(sys.argv) > 1 else "golden.svg")
svg = render_rank2_svg(T, out)
good = svg.count('class="good"')
print(f"wrote {out} ({good} good points)")
