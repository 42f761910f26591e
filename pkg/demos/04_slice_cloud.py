"""Slice boundary point clouds.

Roots of every shifted trace polynomial up to a denominator bound
approximate the boundary of the parameter-space slice; cone-angle
parameters deform the picture.  Writes CSV and SVG scatter files next to
this script.
"""

import pathlib

from fareyslice import GeneratorParams, pleating, serialize

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

for label, params in (("parabolic", None), ("cone_3_4", GeneratorParams(3, 4))):
    cloud = pleating.slice_cloud(16, params)
    points = [(z.real, z.imag) for rs in cloud for z in rs.roots]
    csv_path = OUT / f"slice_{label}.csv"
    svg_path = OUT / f"slice_{label}.svg"
    csv_path.write_text(serialize.roots_csv(cloud))
    svg_path.write_text(serialize.scatter_svg(points))
    worst = max(max(rs.residuals) for rs in cloud)
    print(f"{label}: {len(points)} boundary points from {len(cloud)} slopes, "
          f"worst residual {worst:.1e}")
    print(f"  wrote {csv_path.name} and {svg_path.name}")
