# coding: utf-8

# # Filling a horn of maps
#
# Generate a map into Cyl_3, forget its interior and one face, then ask the
# library to rebuild a filler from the remaining faces.

import random

from dgcyl import cyl
from dgcyl.kan import assemble, boundary, fill
from dgcyl.sampling import random_presentation, sample_hom
from dgcyl.simplex import Horn

rng = random.Random(7)
P = random_presentation(rng)
print(P.dumps())

f = sample_hom(rng, P, cyl(3))
horn = Horn(3, 2)
datum = boundary(f, horn)
for j, face in sorted(datum.faces.items()):
    print(f"face {j}:", {x: face.target.format(face.image(x)) for x in P.names})

# The faces glue to a single map into the horn ring.

glued = assemble(datum)
print({x: glued.target.format(glued.image(x)) for x in P.names})

# The filler agrees with the datum on every face.  It need not equal f.

filler = fill(datum)
print("filler ok:", filler.check())
print("same as f:", filler.hom == f)
