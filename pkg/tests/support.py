"""Shared test helpers: random shape generators and brute-force oracles.

The oracles are independent of the engine's geometry code on purpose:
containment is re-derived here from first principles with numpy (sign
tests against every edge, plain distance formulas), vectorized over
whole pixel grids, so the engine's predicates can be checked against
them wholesale.
"""

from __future__ import annotations

import math
import random

import numpy as np

from movables.geometry import Point

# -- brute-force containment oracles (vectorized) ---------------------------


def polygon_contains_oracle(vertices, xs, ys, tol=1e-9):
    """Inside test as the conjunction of per-edge half-plane sign tests."""
    inside = np.ones(np.shape(xs), dtype=bool)
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        cross = (bx - ax) * (ys - ay) - (by - ay) * (xs - ax)
        inside &= cross >= -tol
    return inside


def circle_contains_oracle(cx, cy, r, xs, ys, tol=1e-9):
    return np.hypot(xs - cx, ys - cy) <= r + tol


def segment_distance_oracle(ax, ay, bx, by, xs, ys):
    """Euclidean distance from grid points to the segment a-b."""
    dx, dy = bx - ax, by - ay
    dd = dx * dx + dy * dy
    if dd == 0.0:
        return np.hypot(xs - ax, ys - ay)
    t = np.clip(((xs - ax) * dx + (ys - ay) * dy) / dd, 0.0, 1.0)
    return np.hypot(xs - (ax + t * dx), ys - (ay + t * dy))


def strip_contains_oracle(ax, ay, bx, by, r, xs, ys, tol=1e-9):
    return segment_distance_oracle(ax, ay, bx, by, xs, ys) <= r + tol


def polygon_boundary_distance(vertices, xs, ys):
    """Distance from grid points to the polygon's boundary curve."""
    n = len(vertices)
    dist = np.full(np.shape(xs), np.inf)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        dist = np.minimum(dist, segment_distance_oracle(ax, ay, bx, by, xs, ys))
    return dist


def grid(x0, y0, x1, y1, n=256):
    xs, ys = np.meshgrid(np.linspace(x0, x1, n), np.linspace(y0, y1, n))
    return xs, ys


# -- random shape generators -------------------------------------------------


def random_convex_vertices(rng: random.Random, n=None, scale=60.0, center=(0.0, 0.0)):
    """Vertices on a random ellipse at strictly increasing angles: convex
    with positive signed area by construction."""
    if n is None:
        n = rng.randint(3, 8)
    while True:
        angles = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(n))
        gaps = [angles[i + 1] - angles[i] for i in range(n - 1)]
        gaps.append(2.0 * math.pi - (angles[-1] - angles[0]))
        # no sliver polygons: vertices spread around the whole ellipse
        if min(gaps) > 0.2 and max(gaps) < 2.2:
            break
    a = rng.uniform(0.5, 1.0) * scale
    b = rng.uniform(0.5, 1.0) * scale
    cx, cy = center
    return [(cx + a * math.cos(t), cy + b * math.sin(t)) for t in angles]


def random_rect_params(rng: random.Random, lo=30.0, hi=200.0):
    return {"width": rng.uniform(lo, hi), "height": rng.uniform(lo, hi)}


def random_circle_params(rng: random.Random, lo=20.0, hi=120.0):
    return {"radius": rng.uniform(lo, hi)}


def random_polygon_params(rng: random.Random, scale=60.0):
    return {"vertices": [list(v) for v in random_convex_vertices(rng, scale=scale)]}


# -- point samplers (local coordinates) --------------------------------------


def sample_inner_point(rng: random.Random, kind, size_params, margin):
    """A point strictly inside the shape, at least `margin` from its
    boundary (rejection sampling for polygons)."""
    if kind in ("rect", "labeled-field"):
        w, h = size_params["width"], size_params["height"]
        return Point(rng.uniform(margin, w - margin), rng.uniform(margin, h - margin))
    if kind == "circle":
        r = size_params["radius"] - margin
        rho = r * math.sqrt(rng.random())
        t = rng.uniform(0.0, 2.0 * math.pi)
        return Point(rho * math.cos(t), rho * math.sin(t))
    verts = size_params["vertices"]
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    while True:
        p = (rng.uniform(min(xs), max(xs)), rng.uniform(min(ys), max(ys)))
        if not polygon_contains_oracle(verts, np.array(p[0]), np.array(p[1]), tol=0.0):
            continue
        d = polygon_boundary_distance(verts, np.array(p[0]), np.array(p[1]))
        if float(d) > margin:
            return Point(p[0], p[1])


def sample_boundary_point(rng: random.Random, kind, size_params):
    """A point exactly on the shape's outline (up to float rounding)."""
    if kind in ("rect", "labeled-field"):
        w, h = size_params["width"], size_params["height"]
        corners = [(0.0, 0.0), (w, 0.0), (w, h), (0.0, h)]
    elif kind == "circle":
        r = size_params["radius"]
        t = rng.uniform(0.0, 2.0 * math.pi)
        return Point(r * math.cos(t), r * math.sin(t))
    else:
        corners = [tuple(v) for v in size_params["vertices"]]
    i = rng.randrange(len(corners))
    ax, ay = corners[i]
    bx, by = corners[(i + 1) % len(corners)]
    t = rng.random()
    return Point(ax + t * (bx - ax), ay + t * (by - ay))
