#!/usr/bin/env python3
"""Regenerate the frozen integer-sequence fixtures under data/oeis/.

Every sequence is computed here from first principles (direct object
enumeration, reflection-principle closed forms, or transfer DPs) with no
dependency on the C++ library, so the fixtures act as an independent oracle
for the library's series/walk routes. Known reference prefixes and the
hand-checked distribution tables are asserted before anything is written.

Usage: python3 tools/gen_fixtures.py [output_dir]   (default: data/oeis)
"""

import json
import math
import os
import sys
from itertools import product


def binom(n, k):
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# Statistics from their definitions, on paths given as +-1 step sequences.
# ---------------------------------------------------------------------------

def heights(steps):
    h = [0]
    for s in steps:
        h.append(h[-1] + s)
    return h


def ds_stat(steps):
    """Steps i in 1..n whose endpoints i-1, i both satisfy h_i = h_{2n-i}."""
    h = heights(steps)
    n = len(steps) // 2
    mirrored = [h[i] == h[2 * n - i] for i in range(2 * n + 1)]
    return sum(1 for i in range(1, n + 1) if mirrored[i - 1] and mirrored[i])


def sv_stat(steps):
    """Vertices i in 0..n-1 with h_i = h_{2n-i}."""
    h = heights(steps)
    n = len(steps) // 2
    return sum(1 for i in range(n) if h[i] == h[2 * n - i])


def lattice_paths(n, nonnegative):
    """All +-1 sequences of length 2n ending at 0 (staying >= 0 if asked)."""
    out = []

    def rec(prefix, h, rem):
        if rem == 0:
            if h == 0:
                out.append(tuple(prefix))
            return
        if h + rem < 0 or h - rem > 0:
            return
        for s in (+1, -1):
            if nonnegative and h + s < 0:
                continue
            prefix.append(s)
            rec(prefix, h + s, rem - 1)
            prefix.pop()

    rec([], 0, n)
    return out


def triangle_by_stat(max_n, nonnegative, stat, k_lo):
    rows = []
    for n in range(1, max_n + 1):
        counts = {}
        for p in lattice_paths(2 * n, nonnegative):
            k = stat(p)
            counts[k] = counts.get(k, 0) + 1
        rows.append([counts.get(k, 0) for k in range(k_lo, n + 1)])
    return rows


# ---------------------------------------------------------------------------
# Quarter-plane walk DPs (steps E, W, NW, SE; optionally NW doubled on axis).
# ---------------------------------------------------------------------------

def walk_counts(max_len, colored):
    """tables[n][(x, y)] = number of walks of length n from the origin."""
    tables = [{(0, 0): 1}]
    for _ in range(max_len):
        nxt = {}
        for (x, y), c in tables[-1].items():
            moves = [(x + 1, y, 1), (x - 1, y, 1),
                     (x - 1, y + 1, 2 if (colored and y == 0) else 1),
                     (x + 1, y - 1, 1)]
            for nx, ny, mult in moves:
                if nx >= 0 and ny >= 0:
                    key = (nx, ny)
                    nxt[key] = nxt.get(key, 0) + mult * c
        tables.append(nxt)
    return tables


def ballot(b, n):
    """Nonnegative +-1 paths from 0 to b in n steps (reflection principle)."""
    if (n + b) % 2 or b < 0 or b > n:
        return 0
    return binom(n, (n + b) // 2) - binom(n, (n + b) // 2 + 1)


def peakless_motzkin(max_n):
    """Motzkin paths with no UD factor, by length; transfer DP over
    (height, previous step was U)."""
    counts = []
    for n in range(max_n + 1):
        dp = {(0, False): 1}
        for _ in range(n):
            nxt = {}
            for (h, after_u), c in dp.items():
                for step in ("U", "H", "D"):
                    if step == "D" and (h == 0 or after_u):
                        continue
                    nh = h + (step == "U") - (step == "D")
                    key = (nh, step == "U")
                    nxt[key] = nxt.get(key, 0) + c
            dp = nxt
        counts.append(sum(c for (h, _), c in dp.items() if h == 0))
    return counts


# ---------------------------------------------------------------------------
# Hand-checked distribution tables (grand Dyck n <= 6, Dyck n <= 7).
# ---------------------------------------------------------------------------

GRAND_DS_ROWS = [
    [0, 2],
    [2, 0, 4],
    [4, 8, 0, 8],
    [14, 16, 24, 0, 16],
    [44, 64, 48, 64, 0, 32],
    [148, 208, 216, 128, 160, 0, 64],
]
GRAND_SV_ROWS = [
    [2],
    [2, 4],
    [4, 8, 8],
    [10, 20, 24, 16],
    [28, 56, 72, 64, 32],
    [84, 168, 224, 224, 160, 64],
]
DYCK_DS_ROWS = [
    [1],
    [0, 2],
    [2, 0, 3],
    [2, 6, 0, 6],
    [8, 8, 16, 0, 10],
    [16, 32, 24, 40, 0, 20],
    [52, 84, 108, 60, 90, 0, 35],
]
DYCK_SV_ROWS = [
    [1],
    [0, 2],
    [0, 2, 3],
    [0, 2, 6, 6],
    [0, 4, 12, 16, 10],
    [0, 8, 24, 40, 40, 20],
    [0, 20, 60, 104, 120, 90, 35],
]

# Reference prefixes for the established sequences.
REF = {
    "A051286": [1, 1, 2, 5, 11, 26, 63, 153, 376, 931, 2317, 5794, 14545],
    "A004148": [1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283],
}


def flatten(rows):
    return [t for row in rows for t in row]


def build_fixtures():
    fixtures = []

    def add(seq_id, offset, terms, source, note):
        assert len(terms) >= 12, f"{seq_id}: only {len(terms)} terms"
        fixtures.append({
            "id": seq_id,
            "offset": offset,
            "terms": [str(t) for t in terms],
            "source": source,
            "note": note,
        })

    # --- triangles from direct enumeration ---
    grand_ds = triangle_by_stat(9, nonnegative=False, stat=ds_stat, k_lo=0)
    assert grand_ds[:6] == GRAND_DS_ROWS
    add("A341415", 1, flatten(grand_ds),
        "self-generated: exhaustive enumeration of grand Dyck paths",
        "triangle rows n = 1..9 flattened, k = 0..n: grand Dyck paths of "
        "semilength n with degree of symmetry k")

    grand_sv = triangle_by_stat(7, nonnegative=False, stat=sv_stat, k_lo=1)
    assert grand_sv[:6] == GRAND_SV_ROWS
    closed = [[(2 ** k) * k * binom(2 * n - k, n - k) // (2 * n - k)
               for k in range(1, n + 1)] for n in range(1, 11)]
    assert closed[:7] == grand_sv
    add("A108747", 1, flatten(closed),
        "closed form T(n,k) = 2^k (k/(2n-k)) binom(2n-k, n-k), cross-checked "
        "against exhaustive enumeration for n <= 7",
        "triangle rows n = 1..10 flattened, k = 1..n: grand Dyck paths of "
        "semilength n with k symmetric vertices (equivalently k returns)")

    dyck_ds = triangle_by_stat(9, nonnegative=True, stat=ds_stat, k_lo=1)
    assert dyck_ds[:7] == DYCK_DS_ROWS
    add("A341445", 1, flatten(dyck_ds),
        "self-generated: exhaustive enumeration of Dyck paths",
        "triangle rows n = 1..9 flattened, k = 1..n: Dyck paths of semilength "
        "n with degree of symmetry k (ds >= 1 always, so no k=0 column)")
    add("A298645", 1, flatten(dyck_ds),
        "self-generated: exhaustive enumeration of Dyck paths",
        "same triangle as A341445 (Dyck paths by degree of symmetry); the "
        "public entry's flattening convention was not observable offline, so "
        "this fixture freezes the k = 1..n row convention and the checker "
        "also accepts the variant with the structural k=0 column")

    dyck_sv = triangle_by_stat(9, nonnegative=True, stat=sv_stat, k_lo=1)
    assert dyck_sv[:7] == DYCK_SV_ROWS
    add("A339754", 1, flatten(dyck_sv),
        "self-generated: exhaustive enumeration of Dyck paths",
        "triangle rows n = 1..9 flattened, k = 1..n: Dyck paths of semilength "
        "n with k symmetric vertices")

    # --- established scalar sequences ---
    a051286 = [sum(binom(k, n - k) ** 2 for k in range(n + 1)) for n in range(16)]
    assert a051286[:13] == REF["A051286"]
    add("A051286", 0, a051286,
        "formula a(n) = sum_k binom(k, n-k)^2, asserted against the reference "
        "prefix",
        "a(n) = uneven bicolored grand Motzkin paths of weight n; also the "
        "number of unimodal centered bargraphs of semiperimeter n+1")

    a004148 = peakless_motzkin(15)
    assert a004148[:13] == REF["A004148"]
    add("A004148", 0, a004148,
        "transfer DP counting Motzkin paths with no UD factor, asserted "
        "against the reference prefix",
        "a(n) = Motzkin paths of length n with no peaks; equally Motzkin "
        "paths of length n-1 with no valleys, and uneven bicolored Motzkin "
        "paths of weight n-1")

    # --- quarter-plane walks, uncolored ---
    uncolored = walk_counts(13, colored=False)
    a005817 = []
    for n in range(14):
        m, r = divmod(n, 2)
        a005817.append(catalan(m) * catalan(m + 1) if r == 0 else catalan(m + 1) ** 2)
    assert a005817 == [sum(c for (x, y), c in t.items() if y == 0) for t in uncolored]
    add("A005817", 0, a005817,
        "closed form a(2m) = C(m) C(m+1), a(2m+1) = C(m+1)^2, cross-checked "
        "against a direct walk DP",
        "quarter-plane walks with steps E, W, NW, SE ending on the x-axis")

    a005558 = []
    for n in range(14):
        m, r = divmod(n, 2)
        if r == 0:
            a005558.append(2 * catalan(m) * binom(2 * m, m) - catalan(m) ** 2)
        else:
            a005558.append(catalan(m + 1) * binom(2 * m + 1, m))
    assert a005558 == [sum(t.values()) for t in uncolored]
    add("A005558", 0, a005558,
        "closed forms a(2m) = 2 C(m) binom(2m,m) - C(m)^2 and a(2m+1) = "
        "C(m+1) binom(2m+1, m), cross-checked against a direct walk DP",
        "quarter-plane walks with steps E, W, NW, SE, arbitrary endpoint")

    # --- quarter-plane walks, NW doubled on the x-axis ---
    colored = walk_counts(24, colored=True)
    a001246 = [catalan(n) ** 2 for n in range(13)]
    assert a001246 == [colored[2 * n].get((0, 0), 0) for n in range(13)]
    add("A001246", 0, a001246,
        "squared Catalan numbers, cross-checked against the doubled-NW walk "
        "DP at the origin",
        "Dyck paths of semilength n with midpoint at height 0; walk model: "
        "length-2n walks ending at the origin")

    a018224 = [binom(n, n // 2) ** 2 for n in range(14)]
    assert a018224 == [sum(colored[n].values()) for n in range(14)]
    add("A018224", 0, a018224,
        "squared central binomials binom(n, floor(n/2))^2, cross-checked "
        "against the doubled-NW walk DP over all endpoints",
        "pairs of Dyck-path halves glued discontinuously at the midpoint; "
        "walk model: length-n walks with arbitrary endpoint")

    a000891 = [2 * catalan(n) * binom(2 * n, n) - catalan(n) ** 2 for n in range(12)]
    assert a000891 == [sum(c for (x, y), c in colored[2 * n].items() if x == 0)
                       for n in range(12)]
    add("A000891", 0, a000891,
        "closed form 2 C(n) binom(2n,n) - C(n)^2, cross-checked against the "
        "doubled-NW walk DP on the y-axis",
        "discontinuous-midpoint pairs with one half a Dyck path; walk model: "
        "length-2n walks ending at x = 0")

    # --- Dyck paths by midpoint height ---
    rows = []
    for n in range(9):
        rows.append([ballot(b, n) ** 2 for b in range(n % 2, n + 1, 2)])
    # spot checks against direct enumeration of nonnegative paths
    for n in range(7):
        for i, b in enumerate(range(n % 2, n + 1, 2)):
            direct = 0
            for p in product((+1, -1), repeat=n):
                h = heights(p)
                if min(h) >= 0 and h[-1] == b:
                    direct += 1
            assert rows[n][i] == direct ** 2
    add("A213600", 0, flatten(rows),
        "squared reflection-principle ballot counts (binom(n,(n+b)/2) - "
        "binom(n,(n+b)/2+1))^2, cross-checked against direct enumeration",
        "triangle rows n = 0..8 flattened, midpoint height b = n mod 2 .. n "
        "ascending by 2: Dyck paths of semilength n with midpoint height b")

    return fixtures


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "oeis")
    fixtures = build_fixtures()
    os.makedirs(out_dir, exist_ok=True)
    for f in fixtures:
        path = os.path.join(out_dir, f["id"] + ".json")
        with open(path, "w") as fh:
            json.dump(f, fh, indent=2)
            fh.write("\n")
        print(f"wrote {path} ({len(f['terms'])} terms)")


if __name__ == "__main__":
    main()
