"""Inner loops of the Graver completion.

The functions are written so they run unchanged on two kinds of input:

* ``int64`` arrays, through the numba-compiled ``*_jit`` functions, and
* ``object`` arrays of Python ints, through the plain ``*_py`` functions
  (exact fallback used when entries approach the int64 range or there are
  more than 62 columns).

Each set of vectors is stored as rows of ``R`` together with bit masks ``P``
and ``N`` of the positive and negative coordinates.  Only the first ``d``
coordinates ("active" ones) take part in the conformal order.
"""
from __future__ import annotations

import numba

DONE, YIELD, GROW, OVERFLOW = 0, 1, 2, 3


def _build(jit):
    @jit
    def _masks(s, d):
        sp = 0
        sn = 0
        for t in range(d):
            if s[t] > 0:
                sp |= 1 << t
            elif s[t] < 0:
                sn |= 1 << t
        return sp, sn

    @jit
    def _fits(g, s, d, sign):
        for t in range(d):
            x = sign * g[t]
            if x > 0:
                if s[t] < x:
                    return False
            elif x < 0:
                if s[t] > x:
                    return False
        return True

    @jit
    def _normal_form(s, R, P, N, count, d, amask, limit):
        """Reduce ``s`` in place by every ``+-R[i]`` conformal to it.

        Returns 0 when ``s`` reduces to zero on the active coordinates, 1 when an
        irreducible nonzero residue remains, and 3 on overflow.
        """
        n = s.shape[0]
        sp, sn = _masks(s, d)
        if sp == 0 and sn == 0:
            return 0
        for i in range(count):
            rp = P[i] & amask
            rn = N[i] & amask
            if (rp & ~sp) == 0 and (rn & ~sn) == 0:
                sign = 1
            elif (rn & ~sp) == 0 and (rp & ~sn) == 0:
                sign = -1
            else:
                continue
            while _fits(R[i], s, d, sign):
                for t in range(n):
                    s[t] -= sign * R[i, t]
                    if s[t] > limit or -s[t] > limit:
                        return 3
                sp, sn = _masks(s, d)
                if sp == 0 and sn == 0:
                    return 0
                rp_ok = (rp & ~sp) == 0 and (rn & ~sn) == 0
                rn_ok = (rn & ~sp) == 0 and (rp & ~sn) == 0
                if not (rp_ok if sign == 1 else rn_ok):
                    break
        return 1

    @jit
    def _append(s, R, P, N, count):
        n = s.shape[0]
        flip = 1
        for t in range(n):
            if s[t] != 0:
                if s[t] < 0:
                    flip = -1
                break
        pm = 0
        nm = 0
        for t in range(n):
            x = flip * s[t]
            R[count, t] = x
            if x > 0:
                pm |= 1 << t
            elif x < 0:
                nm |= 1 << t
        P[count] = pm
        N[count] = nm

    @jit
    def _degree(s):
        tot = 0
        for t in range(s.shape[0]):
            if s[t] > 0:
                tot += s[t]
        return tot

    @jit
    def _complete(R, P, N, count, a, b, d, mode, limit, max_pairs, s, max_degree):
        """Run the completion over pairs ``(a, b)``, ``b < a``, resuming at ``(a, b)``.

        ``mode == 0`` lifts coordinate ``d - 1``: a pair is used only when the two
        vectors (after choosing the sign of ``b``) are sign-compatible on the first
        ``d - 1`` coordinates and opposite on coordinate ``d - 1``.
        ``mode == 1`` is plain completion on the first ``d`` coordinates: every
        sign choice with some cancellation among active coordinates is used.

        New irreducible vectors are appended at ``R[count]``.  Returns
        ``(status, a, b, count)``.  ``max_degree > 0`` discards residues of larger
        degree.
        """
        cap = R.shape[0]
        n = R.shape[1]
        amask = (1 << d) - 1
        pmask = (1 << (d - 1)) - 1
        j = d - 1
        work = 0
        while a < count:
            while b < a:
                for rep in range(2):
                    if mode == 0:
                        if rep == 1:
                            break
                        ra = R[a, j]
                        rb = R[b, j]
                        if ra == 0 or rb == 0:
                            break
                        eps = -1 if (ra > 0) == (rb > 0) else 1
                        if eps == 1:
                            if (P[a] & N[b] & pmask) != 0 or (N[a] & P[b] & pmask) != 0:
                                break
                        else:
                            if (P[a] & P[b] & pmask) != 0 or (N[a] & N[b] & pmask) != 0:
                                break
                    else:
                        eps = 1 if rep == 0 else -1
                        if eps == 1:
                            if (P[a] & N[b] & amask) == 0 and (N[a] & P[b] & amask) == 0:
                                continue
                        else:
                            if (P[a] & P[b] & amask) == 0 and (N[a] & N[b] & amask) == 0:
                                continue
                    for t in range(n):
                        s[t] = R[a, t] + eps * R[b, t]
                        if s[t] > limit or -s[t] > limit:
                            return OVERFLOW, a, b, count
                    status = _normal_form(s, R, P, N, count, d, amask, limit)
                    if status == 3:
                        return OVERFLOW, a, b, count
                    if status == 1:
                        if max_degree > 0 and _degree(s) > max_degree:
                            continue
                        if count == cap:
                            return GROW, a, b, count
                        _append(s, R, P, N, count)
                        count += 1
                b += 1
                work += 1
                if work >= max_pairs:
                    return YIELD, a, b, count
            a += 1
            b = 0
        return DONE, a, b, count

    @jit
    def _minimal(R, P, N, count, d, keep):
        """Set ``keep[i] = 0`` for every row dominated by another row on ``d`` coords."""
        amask = (1 << d) - 1
        for i in range(count):
            keep[i] = 1
            vp = P[i] & amask
            vn = N[i] & amask
            for k in range(count):
                if k == i:
                    continue
                rp = P[k] & amask
                rn = N[k] & amask
                if (rp & ~vp) == 0 and (rn & ~vn) == 0:
                    sign = 1
                elif (rn & ~vp) == 0 and (rp & ~vn) == 0:
                    sign = -1
                else:
                    continue
                if _fits(R[k], R[i], d, sign):
                    # equal vectors cannot occur: the set holds distinct sign classes
                    keep[i] = 0
                    break

    return _complete, _minimal


complete_jit, minimal_jit = _build(numba.njit)
complete_py, minimal_py = _build(lambda f: f)
