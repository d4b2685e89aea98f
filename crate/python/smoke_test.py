"""Smoke test for the transcover_py extension module."""

import math

import transcover_py as tc


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    fan = [tc.Segment.centered((0.0, 0.0), 1.0, k * math.pi / 3) for k in range(3)]
    cover = tc.min_area_cover(fan)
    assert close(cover.area, math.sqrt(3) / 4), cover
    assert all(p is not None for p in tc.verify_cover(cover.polygon(), fan))

    # plain tuples work as segments too
    assert tc.min_area_cover([(0, 0, 1, 0)]).degenerate

    ring = [(math.cos(k * math.pi / 6), math.sin(k * math.pi / 6)) for k in range(12)]
    hexagon = tc.min_affine_hexagon(ring)
    assert close(hexagon.area, 2 * math.sqrt(3) * math.cos(math.pi / 12) ** 2), hexagon
    assert close(hexagon.area, 0.75 * hexagon.parallelogram_area)

    cross = tc.min_perimeter_cover(segments=[(0, 0, 1, 0), (3, 3, 3, 4)])
    assert close(cross.perimeter(), 2 * math.sqrt(2))

    center, radius = tc.keyhole_disk(tc.Polygon([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)]))
    assert close(radius, 1 / math.sqrt(3))

    assert close(tc.rect_cover([(1, 2), (2, 1)]).area(), 3.5)

    try:
        tc.min_area_cover([])
    except ValueError:
        pass
    else:
        raise AssertionError("empty family accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
