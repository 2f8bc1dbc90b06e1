"""Walk through the orbit/tiling correspondence on the fence (4,3,4).

The fence has ten elements and four rowmotion orbits on antichains: one
of length 5 and three of length 17.  Each orbit becomes a cylindrical
tiling whose columns are the successive antichains; this script prints
the orbits, their tilings, and the tile counts, and writes the short
orbit's tiling as an SVG next to this file.
"""

from pathlib import Path

from fences import (
    antichain_orbits,
    build_fence,
    orbit_of_tiling,
    render_tiling,
    tile_counts,
    tiling_of_orbit,
)

F = build_fence((4, 3, 4))
print(f"fence {F.alpha} with n = {F.n} elements")
print("covers:", "  ".join(f"x{a}<x{b}" for a, b in F.cover_pairs()))
print()

for orbit in antichain_orbits(F):
    print(f"orbit of size {orbit.size}, starting from {orbit.representative.label()}:")
    if orbit.size <= 6:
        for S in orbit.reps:
            print("   ", S.label())
    T = tiling_of_orbit(F, orbit)
    print(render_tiling(T, "ascii"))
    c = tile_counts(T)
    print("black tiles per row:", c.black_sequence)
    print("red heads per row:  ", c.red_sequence)
    # every row with at least two cells satisfies width = b_i*alpha_i + r_i + r_{i-1}
    for i in range(1, F.s + 1):
        lhs = c.black_in_row(i) * F.alpha[i - 1] + c.red_heads_in_row(i) + c.red_heads_in_row(i - 1)
        assert lhs == T.width
    # decoding the tiling recovers the orbit
    assert orbit_of_tiling(F, T).reps == orbit.reps
    print()

short = next(o for o in antichain_orbits(F) if o.size == 5)
dest = Path(__file__).with_name("orbit5_4_3_4.svg")
dest.write_text(render_tiling(tiling_of_orbit(F, short), "svg"))
print("wrote", dest.name)
