"""Walkthrough: classify T = Q[[x,y,z,v]] / ((x) cap (y,z)).

This ring is the completion of a noncatenary local domain (in fact a
quasi-excellent one), but not of any noncatenary UFD. The script builds
the ring two ways, confirms they agree, and walks through the facts the
classifier reports.
"""

from noncat import (
    FieldDescriptor,
    IdealHandle,
    RingPresentation,
    VariableContext,
    analyze,
    variables,
)

field = FieldDescriptor(0)  # the rationals
context = VariableContext(("x", "y", "z", "v"))
x, y, z, v = variables(field, context)

# the defining ideal, once as the intersection it comes from ...
plane = IdealHandle(field, context, (x,))
line_pair = IdealHandle(field, context, (y, z))
intersection = plane.intersection(line_pair)
print("generators of (x) cap (y,z):",
      ", ".join(str(g) for g in intersection.generators))

# ... and once by its product generators
ring = RingPresentation(field, context, (x * y, x * z))
assert intersection.equals(IdealHandle.from_presentation(ring))

report = analyze(ring)
print("\nring:", report.ring)
print("dim T =", report.dim)
print("noncatenarity profile:", set(report.profile))
print("minimal primes:",
      ", ".join(f"({','.join(p.gens)}) of dim {p.dim}"
                for p in report.minimal_primes))

# the characterization: a noncatenary-domain completion needs the socle
# test to pass and a minimal prime strictly between dim 1 and dim T
print("\nM associated?", not report.conditions["lech_ii"])
print("noncatenary-domain completion:", report.verdicts["noncat_domain"])
print("witness prime P:", report.witnesses.P)
print("saturated chain from P:",
      "  <  ".join("(" + ",".join(q) + ")" for q in report.witnesses.chain))

# no minimal prime has 2 < dim(T/P) < 3, so no noncatenary UFD completes here
print("\nnoncatenary-UFD completion:", report.verdicts["noncat_ufd"])

# both localizations at minimal primes are regular, and the coefficient
# field has characteristic zero: the constructed domain is quasi-excellent
print("regular at every minimal prime:",
      report.verdicts["regularity_at_min"])
print("universally catenary obstructed:",
      report.verdicts["universally_catenary_obstructed"])
