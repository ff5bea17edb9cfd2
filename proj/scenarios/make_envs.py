#!/usr/bin/env python3
"""Regenerates the shipped .env worlds.

Layered-ASCII format: header "voxelworld nx ny nz edge", then nz blocks
(z=0 first) of ny rows with nx chars, '--' between blocks, '.'=free,
'#'=occupied. All worlds have a solid z=0 floor and full-height outer walls;
interior walls are axis-aligned rectangles in meters.
"""

import sys
from collections import deque

EDGE = 0.1


def build(nx, ny, nz, walls, blocks=()):
    """walls: (x0,y0,x1,y1) in m, full height. blocks: (x0,y0,x1,y1,z0,z1)."""
    occ = [[[False] * nx for _ in range(ny)] for _ in range(nz)]
    for y in range(ny):
        for x in range(nx):
            occ[0][y][x] = True  # floor
    rects = [(x0, y0, x1, y1, EDGE, nz * EDGE) for (x0, y0, x1, y1) in walls]
    rects += list(blocks)
    for (x0, y0, x1, y1, z0, z1) in rects:
        for z in range(max(0, int(round(z0 / EDGE))), min(nz, int(round(z1 / EDGE)))):
            for y in range(max(0, int(round(y0 / EDGE))), min(ny, int(round(y1 / EDGE)))):
                for x in range(max(0, int(round(x0 / EDGE))), min(nx, int(round(x1 / EDGE)))):
                    occ[z][y][x] = True
    return occ


def outer_walls(w, h, t=0.2):
    return [(0, 0, w, t), (0, h - t, w, h), (0, 0, t, h), (w - t, 0, w, h)]


def check_connected(occ, spawn_xy):
    """Free voxels at z=1 must form one 4-connected component from spawn."""
    nz, ny, nx = len(occ), len(occ[0]), len(occ[0][0])
    sx, sy = int(spawn_xy[0] / EDGE), int(spawn_xy[1] / EDGE)
    assert not occ[1][sy][sx], "spawn is inside a wall"
    seen = [[False] * nx for _ in range(ny)]
    q = deque([(sx, sy)])
    seen[sy][sx] = True
    while q:
        x, y = q.popleft()
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            a, b = x + dx, y + dy
            if 0 <= a < nx and 0 <= b < ny and not seen[b][a] and not occ[1][b][a]:
                seen[b][a] = True
                q.append((a, b))
    stranded = sum(
        1 for y in range(ny) for x in range(nx) if not occ[1][y][x] and not seen[y][x]
    )
    assert stranded == 0, f"{stranded} free cells unreachable from spawn"


def emit(path, occ):
    nz, ny, nx = len(occ), len(occ[0]), len(occ[0][0])
    lines = [f"voxelworld {nx} {ny} {nz} {EDGE}"]
    for z in range(nz):
        if z:
            lines.append("--")
        for y in range(ny):
            lines.append("".join("#" if occ[z][y][x] else "." for x in range(nx)))
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {path} ({nx}x{ny}x{nz})")


def room_small():
    # 6 x 6 x 1.6 m open room, one pillar.
    walls = outer_walls(6, 6) + [(2.8, 2.8, 3.4, 3.4)]
    occ = build(60, 60, 16, walls)
    check_connected(occ, (1.0, 1.0))
    emit("room_small.env", occ)


def maze_medium():
    # 12 x 12 x 2 m maze: 0.2 m walls, 1.4 m doorways, corridors >= 1.2 m.
    walls = outer_walls(12, 12)
    walls += [  # vertical wall x = 4 m, doors at y 2.0-3.4 and 8.0-9.4
        (3.9, 0.2, 4.1, 2.0), (3.9, 3.4, 4.1, 8.0), (3.9, 9.4, 4.1, 11.8),
        # vertical wall x = 8 m, doors at y 5.0-6.4 and 10.0-11.4
        (7.9, 0.2, 8.1, 5.0), (7.9, 6.4, 8.1, 10.0), (7.9, 11.4, 8.1, 11.8),
        # horizontal wall y = 4 m (left cell), door at x 1.5-2.9
        (0.2, 3.9, 1.5, 4.1), (2.9, 3.9, 3.9, 4.1),
        # horizontal wall y = 8 m (middle cell), door at x 5.5-6.9
        (4.1, 7.9, 5.5, 8.1), (6.9, 7.9, 7.9, 8.1),
        # horizontal wall y = 6 m (right cell), door at x 9.5-10.9
        (8.1, 5.9, 9.5, 6.1), (10.9, 5.9, 11.8, 6.1),
    ]
    blocks = [(1.2, 9.2, 2.4, 10.4, 0.1, 2.0)]  # crate in the NW room
    occ = build(120, 120, 20, walls, blocks)
    check_connected(occ, (1.0, 1.0))
    emit("maze_medium.env", occ)


def indoor_25m():
    # 25 x 25 x 2.5 m office-like floor, full-scale analog of maze_medium.
    walls = outer_walls(25, 25)
    for x in (6.0, 12.0, 18.0):  # vertical walls with staggered doors
        gaps = [(3.0, 4.6), (12.0, 13.6), (20.0, 21.6)] if x != 12.0 else [
            (7.0, 8.6), (16.0, 17.6)]
        y = 0.2
        for (g0, g1) in gaps:
            walls.append((x - 0.1, y, x + 0.1, g0))
            y = g1
        walls.append((x - 0.1, y, x + 0.1, 24.8))
    for y in (8.0, 16.0):  # horizontal walls with doors
        for (a, b, g0, g1) in [(0.2, 5.9, 2.0, 3.6), (6.1, 11.9, 9.0, 10.6),
                               (12.1, 17.9, 14.0, 15.6), (18.1, 24.8, 21.0, 22.6)]:
            walls.append((a, y - 0.1, g0, y + 0.1))
            walls.append((g1, y - 0.1, b, y + 0.1))
    blocks = [(3.0, 20.0, 4.4, 21.4, 0.1, 2.5), (20.0, 3.0, 21.6, 4.6, 0.1, 1.0)]
    occ = build(250, 250, 25, walls, blocks)
    check_connected(occ, (1.5, 1.5))
    emit("indoor_25m.env", occ)


def pocket():
    # Spawn sealed in a 1 x 1 m cell inside a 3 x 3 m world.
    walls = outer_walls(3, 3) + [
        (0.8, 0.8, 2.2, 1.0), (0.8, 2.0, 2.2, 2.2),
        (0.8, 1.0, 1.0, 2.0), (2.0, 1.0, 2.2, 2.0),
    ]
    occ = build(30, 30, 10, walls)
    emit("pocket.env", occ)


if __name__ == "__main__":
    import os
    os.chdir(os.path.dirname(os.path.abspath(__file__)))
    room_small()
    maze_medium()
    indoor_25m()
    pocket()
    print("done", file=sys.stderr)
