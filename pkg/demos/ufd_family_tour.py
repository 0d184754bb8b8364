"""Tour of the noncatenary-UFD family

    T(a, b) = Q[[x, y1..ya, z1..zb]] / ((x) cap (y1..ya)),  a, b > 1.

Each member has dim T = a + b, profile {a+b, b+1}, depth > 1, and a
minimal prime with 2 < dim(T/P) < dim T, so each is the completion of a
noncatenary local UFD. The witness bundle per ring: a regular element
certifying the depth, and a dimension-one prime Q' of deficient height
whose localization also has depth > 1.
"""

from noncat import FamilySpec, analyze, instantiate

print(f"{'(a,b)':>8} {'dim':>4} {'profile':>10} {'depth cert':>11} "
      f"{'witness prime Q`':>24}")
for a, b in ((2, 2), (2, 3), (3, 2), (3, 3), (4, 2)):
    ring, expected = instantiate(FamilySpec("example_ufd", (a, b)))
    report = analyze(ring)
    assert report.verdicts["noncat_ufd"] is True
    assert report.dim == a + b > 3
    profile = "{" + ",".join(map(str, report.profile)) + "}"
    qprime = "(" + ",".join(report.witnesses.ufd_witness_prime) + ")"
    print(f"{f'({a},{b})':>8} {report.dim:>4} {profile:>10} "
          f"{report.witnesses.regular_element:>11} {qprime:>24}")

print("""
The same ring with b = 1 (for example a = 2, b = 1) drops to profile
{3, 2}: it still completes a noncatenary domain, but every UFD whose
completion it is must be catenary, since no minimal prime reaches
dimension strictly between 2 and dim T.""")

ring, _ = instantiate(FamilySpec("prop41", (2, 3)))  # a = 2, b = 1
report = analyze(ring)
print("prop41(2,3):", "noncat_domain =", report.verdicts["noncat_domain"],
      "/ noncat_ufd =", report.verdicts["noncat_ufd"])
