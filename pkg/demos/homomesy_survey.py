"""Survey homomesy and orbomesy of indicator statistics on small fences.

Differences of same-segment indicators average zero over every orbit; a
weighted combination with the segment's shared endpoints averages one;
the total antichain size is homomesic exactly on fences with all parts
equal to two, and merely orbomesic (same sum on equal-size orbits) on
many larger fences.
"""

from fences import ANTICHAIN, IDEAL, build_fence, check_homomesy, parse_stat

EXAMPLES = [
    ((4, 3, 4), ANTICHAIN, "chi[5]-chi[6]"),
    ((4, 3, 4), ANTICHAIN, "4*chi[1]+chi[4]"),
    ((2, 2, 2), ANTICHAIN, "chi"),
    ((2, 2, 2, 2, 2), ANTICHAIN, "chi"),
    ((4, 4, 4, 4), ANTICHAIN, "chi"),
    ((4, 4, 4, 4), IDEAL, "chihat"),
    ((5, 4), IDEAL, "chihat"),
    ((2, 1, 2, 1, 2), ANTICHAIN, "chi"),
]

for alpha, family, text in EXAMPLES:
    F = build_fence(alpha)
    report = check_homomesy(F, family, parse_stat(text))
    head = f"{text} on {family}s of {F.alpha}:"
    if report.kind == "homomesic":
        print(f"{head} homomesic, every orbit averages {report.constant}")
    else:
        print(f"{head} {report.kind}")
    for size, total, avg in report.per_orbit:
        print(f"    orbit size {size:3d}: sum {total}, average {avg}")
    print()
