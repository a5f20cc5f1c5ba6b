# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel: set algebra and connectivity over 128-bit vertex sets.

Mirrors ``_pykernel.BitKernel`` exactly; sets cross the boundary as Python
ints and are split into two 64-bit words internally.
"""

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

DEF CAP = 128

cdef unsigned long long W64 = 0xFFFFFFFFFFFFFFFFULL


cdef class BitKernel:
    """Connectivity/neighborhood primitives for one fixed graph."""

    cdef public int n
    cdef object _full
    cdef unsigned long long alo[CAP]
    cdef unsigned long long ahi[CAP]

    def __init__(self, int n, adj):
        if n > CAP:
            raise ValueError(f"kernel capacity is {CAP} vertices, got {n}")
        self.n = n
        self._full = ((<object> 1) << n) - 1
        cdef int v
        for v in range(n):
            m = adj[v]
            self.alo[v] = m & W64
            self.ahi[v] = (m >> 64) & W64

    @property
    def full(self):
        return self._full

    @property
    def backend(self):
        return "c"

    cdef void _nb(self, unsigned long long slo, unsigned long long shi,
                  unsigned long long *rlo, unsigned long long *rhi) nogil:
        cdef unsigned long long olo = 0, ohi = 0, m
        cdef int v
        m = slo
        while m:
            v = __builtin_ctzll(m)
            olo |= self.alo[v]
            ohi |= self.ahi[v]
            m &= m - 1
        m = shi
        while m:
            v = 64 + __builtin_ctzll(m)
            olo |= self.alo[v]
            ohi |= self.ahi[v]
            m &= m - 1
        rlo[0] = olo & ~slo
        rhi[0] = ohi & ~shi

    cdef void _comp(self, unsigned long long slo, unsigned long long shi,
                    unsigned long long clo, unsigned long long chi,
                    unsigned long long *rlo, unsigned long long *rhi) nogil:
        # grow the seed (clo, chi) to its full component within (slo, shi)
        cdef unsigned long long flo = clo, fhi = chi
        cdef unsigned long long glo, ghi, m
        cdef int v
        while flo or fhi:
            glo = 0
            ghi = 0
            m = flo
            while m:
                v = __builtin_ctzll(m)
                glo |= self.alo[v]
                ghi |= self.ahi[v]
                m &= m - 1
            m = fhi
            while m:
                v = 64 + __builtin_ctzll(m)
                glo |= self.alo[v]
                ghi |= self.ahi[v]
                m &= m - 1
            flo = glo & slo & ~clo
            fhi = ghi & shi & ~chi
            clo |= flo
            chi |= fhi
        rlo[0] = clo
        rhi[0] = chi

    cdef inline object _join(self, unsigned long long lo, unsigned long long hi):
        if hi:
            return (<object> hi << 64) | lo
        return <object> lo

    def neighborhood(self, s):
        cdef unsigned long long slo = s & W64
        cdef unsigned long long shi = (s >> 64) & W64
        cdef unsigned long long rlo, rhi
        self._nb(slo, shi, &rlo, &rhi)
        return self._join(rlo, rhi)

    def component(self, s, int v):
        cdef unsigned long long slo = s & W64
        cdef unsigned long long shi = (s >> 64) & W64
        cdef unsigned long long clo = 0, chi = 0, rlo, rhi
        if v < 64:
            clo = (<unsigned long long> 1) << v
        else:
            chi = (<unsigned long long> 1) << (v - 64)
        self._comp(slo, shi, clo, chi, &rlo, &rhi)
        return self._join(rlo, rhi)

    def components(self, s):
        cdef unsigned long long slo = s & W64
        cdef unsigned long long shi = (s >> 64) & W64
        cdef unsigned long long clo, chi, rlo, rhi
        out = []
        while slo or shi:
            if slo:
                clo = slo & (~slo + 1)
                chi = 0
            else:
                clo = 0
                chi = shi & (~shi + 1)
            self._comp(slo, shi, clo, chi, &rlo, &rhi)
            out.append(self._join(rlo, rhi))
            slo &= ~rlo
            shi &= ~rhi
        return out

    def is_connected(self, s):
        cdef unsigned long long slo = s & W64
        cdef unsigned long long shi = (s >> 64) & W64
        cdef unsigned long long clo = 0, chi = 0, rlo, rhi
        if slo == 0 and shi == 0:
            return True
        if slo:
            clo = slo & (~slo + 1)
        else:
            chi = shi & (~shi + 1)
        self._comp(slo, shi, clo, chi, &rlo, &rhi)
        return rlo == slo and rhi == shi

    def quotient_path_parts(self, s):
        cdef unsigned long long slo = s & W64
        cdef unsigned long long shi = (s >> 64) & W64
        cdef unsigned long long flo = self._full & W64
        cdef unsigned long long fhi = (self._full >> 64) & W64
        cdef unsigned long long plo[CAP]
        cdef unsigned long long phi[CAP]
        cdef unsigned long long nlo[CAP]
        cdef unsigned long long nhi[CAP]
        cdef unsigned long long clo, chi, rlo, rhi, xlo, xhi
        cdef int k = 0, i, j, d, prev, cur, nxt, steps
        cdef int link0[CAP]
        cdef int link1[CAP]
        cdef int order[CAP]

        # components of s, then of its complement, ascending by minimum member
        xlo = slo
        xhi = shi
        while xlo or xhi:
            if xlo:
                clo = xlo & (~xlo + 1)
                chi = 0
            else:
                clo = 0
                chi = xhi & (~xhi + 1)
            self._comp(xlo, xhi, clo, chi, &rlo, &rhi)
            plo[k] = rlo
            phi[k] = rhi
            k += 1
            xlo &= ~rlo
            xhi &= ~rhi
        xlo = flo & ~slo
        xhi = fhi & ~shi
        while xlo or xhi:
            if xlo:
                clo = xlo & (~xlo + 1)
                chi = 0
            else:
                clo = 0
                chi = xhi & (~xhi + 1)
            self._comp(xlo, xhi, clo, chi, &rlo, &rhi)
            plo[k] = rlo
            phi[k] = rhi
            k += 1
            xlo &= ~rlo
            xhi &= ~rhi

        if k == 0:
            return []
        if k == 1:
            return [self._join(plo[0], phi[0])]

        cdef int endpoints = 0
        cdef int end0 = -1
        for i in range(k):
            self._nb(plo[i], phi[i], &nlo[i], &nhi[i])
        for i in range(k):
            d = 0
            link0[i] = -1
            link1[i] = -1
            for j in range(k):
                if j != i and ((nlo[i] & plo[j]) or (nhi[i] & phi[j])):
                    if d == 0:
                        link0[i] = j
                    elif d == 1:
                        link1[i] = j
                    else:
                        return None
                    d += 1
            if d == 0:
                return None
            if d == 1:
                endpoints += 1
                if end0 < 0:
                    end0 = i
        if endpoints != 2:
            return None

        order[0] = end0
        prev = -1
        cur = end0
        for steps in range(k - 1):
            if link0[cur] != prev:
                nxt = link0[cur]
            elif link1[cur] != prev:
                nxt = link1[cur]
            else:
                return None
            if nxt < 0:
                return None
            prev = cur
            cur = nxt
            order[steps + 1] = cur
        # revisiting a part means the walk closed a cycle short of the end
        seen = set()
        res = []
        for i in range(k):
            j = order[i]
            if j in seen:
                return None
            seen.add(j)
            res.append(self._join(plo[j], phi[j]))
        return res
