"""The coordinate change that makes everything else easy.

The unit-area disk (minus its center) maps onto the square (0,1] x (0,1]
by (r, phi) -> (phi/2pi, pi r^2).  Areas are preserved exactly, disk
rotations become horizontal shifts, and reflections in a diameter become
horizontal flips.  This script checks those claims numerically.
"""

import math

import numpy as np

from yinyang import DiskPoint, disk_to_cylinder, cylinder_to_disk, reflect_u
from yinyang.geometry import DISK_RADIUS, reflect_disk

print("disk radius for unit area:", DISK_RADIUS)

# a few landmark points
for r, phi in [(DISK_RADIUS, 2 * math.pi), (DISK_RADIUS, math.pi), (DISK_RADIUS / 2, math.pi / 2)]:
    c = disk_to_cylinder(DiskPoint(r=r, phi=phi))
    print(f"  (r={r:.4f}, phi={phi:.4f})  ->  (u={c.u:.4f}, v={c.v:.4f})")

# measure preservation on random annular sectors
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(1000):
    r1, r2 = np.sort(rng.uniform(0.0, DISK_RADIUS, 2))
    phi1, phi2 = np.sort(rng.uniform(0.0, 2 * math.pi, 2))
    disk_area = 0.5 * (r2**2 - r1**2) * (phi2 - phi1)
    cyl_area = (phi2 - phi1) / (2 * math.pi) * math.pi * (r2**2 - r1**2)
    worst = max(worst, abs(disk_area - cyl_area))
print("max |disk area - cylinder area| over 1000 sectors:", worst)

# reflection in the diameter at angle pi*g commutes with the transform
g = 0.37
p = DiskPoint(r=0.31, phi=2.1)
lhs = disk_to_cylinder(reflect_disk(g, p))
rhs = reflect_u(g, disk_to_cylinder(p))
print(f"conjugation check at g={g}: |du|={abs(lhs.u - rhs.u):.2e}, |dv|={abs(lhs.v - rhs.v):.2e}")

# round trip
q = cylinder_to_disk(disk_to_cylinder(p))
print(f"round trip error: dr={abs(q.r - p.r):.2e}, dphi={abs(q.phi - p.phi):.2e}")
