"""Compiled depth-first search behind :func:`scrollgraver.cpi.enumerate_pcpi`.

The search runs over the columns of a scroll in order, one side degree at a
time.  It shares nothing with the Graver completion; its only inputs are the
part values and colors of the columns and the identities of lower side degree
found so far.
"""
from __future__ import annotations

import numba
import numpy as np

FULL = -1


def _build(jit):
    @jit
    def _dominated(u, up, un, t, G, GP, GN, start, stop):
        n = u.shape[0]
        for g in range(start[t], stop[t]):
            gp = GP[g]
            gn = GN[g]
            if (gp & ~up) == 0 and (gn & ~un) == 0:
                pass
            elif (gn & ~up) == 0 and (gp & ~un) == 0:
                pass
            else:
                continue
            ok = True
            for j in range(t + 1):
                x = G[g, j]
                if x != 0 and abs(u[j]) < abs(x):
                    ok = False
                    break
            if ok:
                return True
        return False

    @jit
    def _search(k, parts, color, last, cmin, cmax, spread, later, ncolors,
                G, GP, GN, start, stop, out):
        """Store every new identity of side degree ``k`` in ``out``.

        Returns the number stored, or ``FULL`` when ``out`` is too small.
        """
        n = parts.shape[0]
        u = np.zeros(n, dtype=np.int64)
        net = np.zeros(ncolors, dtype=np.int64)
        pos = np.zeros(n + 1, dtype=np.int64)
        neg = np.zeros(n + 1, dtype=np.int64)
        wsum = np.zeros(n + 1, dtype=np.int64)
        started = np.zeros(n + 1, dtype=np.int64)
        cur = np.zeros(n, dtype=np.int64)
        end = np.zeros(n, dtype=np.int64)
        found = 0
        up = 0
        un = 0
        pos[0] = k
        neg[0] = k
        t = 0
        entering = True
        while t >= 0:
            if entering:
                entering = False
                if t == n:
                    if pos[n] == 0 and neg[n] == 0 and wsum[n] == 0:
                        if found == out.shape[0]:
                            return FULL
                        for j in range(n):
                            out[found, j] = u[j]
                        found += 1
                    t -= 1
                    continue
                p = pos[t]
                q = neg[t]
                # the current color takes a positive and a + net negative
                # units on parts in [cmin[t], cmax[t]]; later colors take the
                # remaining p - a of each sign, moving the sum by <= spread[t] each
                m = net[color[t]]
                a_lo = max(0, -m)
                a_hi = p
                if not later[t]:
                    a_lo = p
                ok = a_lo <= a_hi
                if ok:
                    hi = -(1 << 62)
                    lo = 1 << 62
                    for a in (a_lo, a_hi):
                        r = p - a
                        h = a * cmax[t] - (a + m) * cmin[t] + r * spread[t]
                        l = a * cmin[t] - (a + m) * cmax[t] - r * spread[t]
                        hi = max(hi, h)
                        lo = min(lo, l)
                    ok = lo <= -wsum[t] <= hi
                if ok:
                    owe_pos = 0
                    owe_neg = 0
                    for c in range(color[t], ncolors):
                        if net[c] > 0:
                            owe_neg += net[c]
                        else:
                            owe_pos -= net[c]
                    ok = owe_pos <= p and owe_neg <= q
                if not ok:
                    t -= 1
                    continue
                if last[t]:
                    x0 = -net[color[t]]
                    if x0 > p or -x0 > q or (started[t] == 0 and x0 < 0):
                        t -= 1
                        continue
                    cur[t] = x0 - 1
                    end[t] = x0
                else:
                    x0 = -q if started[t] else 0
                    cur[t] = x0 - 1
                    end[t] = p
            # undo the value currently placed at column t, then try the next one
            x = u[t]
            if x != 0:
                net[color[t]] -= x
                up &= ~(1 << t)
                un &= ~(1 << t)
                u[t] = 0
            cur[t] += 1
            if cur[t] > end[t]:
                t -= 1
                continue
            x = cur[t]
            if x != 0:
                u[t] = x
                net[color[t]] += x
                if x > 0:
                    up |= 1 << t
                else:
                    un |= 1 << t
                if _dominated(u, up, un, t, G, GP, GN, start, stop):
                    continue
            pos[t + 1] = pos[t] - max(x, 0)
            neg[t + 1] = neg[t] - max(-x, 0)
            wsum[t + 1] = wsum[t] + x * parts[t]
            started[t + 1] = 1 if (started[t] or x != 0) else 0
            t += 1
            entering = True
        return found

    return _search


search_jit = _build(numba.njit(cache=False))
search_py = _build(lambda f: f)
