"""Export surface pieces as Wavefront OBJ meshes.

Writes one mesh per regime (a fundamental piece of the periodic profile,
the lambda = 1 arc at its critical length, a lambda < 1 piece just beyond
its graph bound) plus a cylinder piece, into demos/out/.  Any OBJ viewer
renders them; vertex count is ns*nt and triangle count 2(ns-1)(nt-1).
"""

import os

import solstab as ss
from solstab.export import cylinder_mesh_obj_text, profile_mesh_obj_text, write_text

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)


def report(path, text):
    v = sum(1 for line in text.split("\n") if line.startswith("v "))
    f = sum(1 for line in text.split("\n") if line.startswith("f "))
    print(f"{path}: {v} vertices, {f} triangles")


curve = ss.make_curve(3.0)
s0 = ss.half_period(curve)
L0 = ss.critical_length_gt1(3.0, 0.0).value
text = profile_mesh_obj_text(curve, (-s0, s0), 2.0 * L0, 96, 24)
path = os.path.join(OUT, "piece_gt1.obj")
write_text(path, text)
report(path, text)

curve = ss.make_curve(1.0)
L0 = ss.critical_length_eq1(2.0).value
text = profile_mesh_obj_text(curve, (-2.0, 2.0), L0, 96, 24)
path = os.path.join(OUT, "piece_eq1.obj")
write_text(path, text)
report(path, text)

curve = ss.make_curve(0.25)
text = profile_mesh_obj_text(curve, (-3.0, 3.0), 25.0, 96, 24)
path = os.path.join(OUT, "piece_lt1.obj")
write_text(path, text)
report(path, text)

text = cylinder_mesh_obj_text(1.0, ss.cylinder_soliton_critical_length(1.0).value, 64, 16)
path = os.path.join(OUT, "cylinder.obj")
write_text(path, text)
report(path, text)
