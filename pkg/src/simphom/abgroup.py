"""Finitely generated abelian groups in canonical form.

A group is a free rank (betti number) plus torsion divisors d1 | d2 | ...
with every di >= 2.  Arbitrary cyclic decompositions are canonicalized by
splitting into prime powers and recombining, so two groups compare equal
exactly when they are abstractly isomorphic.

>>> AbelianGroup.from_cyclics([0, 6, 4]) == AbelianGroup(1, (2, 12))
True
>>> str(AbelianGroup(2, (2, 4)))
'Z^2 + Z/2 + Z/4'
"""

from __future__ import annotations

from dataclasses import dataclass


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _invariant_factors(cyclic_orders) -> tuple[int, ...]:
    """Recombine arbitrary finite cyclic orders into a divisor chain."""
    by_prime: dict[int, list[int]] = {}
    for d in cyclic_orders:
        if d in (0, 1):
            continue
        for p, e in _factorint(d).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    for exps in by_prime.values():
        exps.sort(reverse=True)
    length = max(len(v) for v in by_prime.values())
    chain = []
    for k in range(length):
        d = 1
        for p, exps in by_prime.items():
            if k < len(exps):
                d *= p ** exps[k]
        chain.append(d)
    chain.reverse()
    return tuple(chain)


@dataclass(frozen=True)
class AbelianGroup:
    """betti + ordered torsion divisors, always in canonical form."""

    betti: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("betti must be >= 0")
        canon = _invariant_factors(self.torsion)
        if canon != tuple(self.torsion):
            object.__setattr__(self, "torsion", canon)

    @classmethod
    def from_cyclics(cls, orders) -> "AbelianGroup":
        """Build from cyclic orders, 0 meaning an infinite summand.

        >>> AbelianGroup.from_cyclics([2, 5])
        AbelianGroup(betti=0, torsion=(10,))
        """
        orders = list(orders)
        return cls(sum(1 for d in orders if d == 0),
                   tuple(d for d in orders if d != 0))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, d: int) -> "AbelianGroup":
        return cls(1, ()) if d == 0 else cls(0, (d,))

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def cyclic_summands(self) -> list[int]:
        """Invariant-factor decomposition with 0 for each Z summand."""
        return [0] * self.betti + list(self.torsion)

    def _elementary(self) -> list[tuple[int, int]]:
        out = []
        for d in self.torsion:
            for p, e in _factorint(d).items():
                out.append((p, e))
        return out

    def direct_sum(self, *others: "AbelianGroup") -> "AbelianGroup":
        betti = self.betti + sum(g.betti for g in others)
        torsion = list(self.torsion)
        for g in others:
            torsion.extend(g.torsion)
        return AbelianGroup(betti, tuple(torsion))

    def tensor(self, other: "AbelianGroup") -> "AbelianGroup":
        """Z/a (x) Z/b = Z/gcd(a,b), Z (x) G = G, summand by summand."""
        cyclics = []
        for p, e in self._elementary():
            cyclics.extend([p ** e] * other.betti)
        for p, e in other._elementary():
            cyclics.extend([p ** e] * self.betti)
        for p, e in self._elementary():
            for q, f in other._elementary():
                if p == q:
                    cyclics.append(p ** min(e, f))
        return AbelianGroup(self.betti * other.betti, tuple(cyclics))

    def tor(self, other: "AbelianGroup") -> "AbelianGroup":
        """Tor(Z/a, Z/b) = Z/gcd(a,b); Tor vanishes on free summands."""
        cyclics = [p ** min(e, f)
                   for p, e in self._elementary()
                   for q, f in other._elementary() if p == q]
        return AbelianGroup(0, tuple(cyclics))

    def hom(self, other: "AbelianGroup") -> "AbelianGroup":
        """Hom(Z, G) = G; Hom(Z/a, Z) = 0; Hom(Z/a, Z/b) = Z/gcd(a,b)."""
        cyclics = []
        for p, e in other._elementary():
            cyclics.extend([p ** e] * self.betti)
        for p, e in self._elementary():
            for q, f in other._elementary():
                if p == q:
                    cyclics.append(p ** min(e, f))
        return AbelianGroup(self.betti * other.betti, tuple(cyclics))

    def ext(self, other: "AbelianGroup") -> "AbelianGroup":
        """Ext(Z, G) = 0; Ext(Z/a, Z) = Z/a; Ext(Z/a, Z/b) = Z/gcd(a,b)."""
        cyclics = []
        for p, e in self._elementary():
            cyclics.extend([p ** e] * other.betti)
        for p, e in self._elementary():
            for q, f in other._elementary():
                if p == q:
                    cyclics.append(p ** min(e, f))
        return AbelianGroup(0, tuple(cyclics))

    def __str__(self):
        """Serialize as Z^b + Z/d1 + Z/d2 ('0' when trivial)."""
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Inverse of str(): accepts 'Z', 'Z/4', 'Z^2+Z/2+Z/4', '0'.

        >>> AbelianGroup.parse("Z^2 + Z/4") == AbelianGroup(2, (4,))
        True
        """
        text = text.strip()
        if text == "0":
            return cls.trivial()
        betti = 0
        torsion = []
        for part in text.split("+"):
            part = part.strip()
            if part == "Z":
                betti += 1
            elif part.startswith("Z^"):
                betti += int(part[2:])
            elif part.startswith("Z/"):
                d = int(part[2:])
                if d < 2:
                    raise ValueError(f"bad torsion order {d!r}")
                torsion.append(d)
            elif part:
                raise ValueError(f"cannot parse group term {part!r}")
        return cls(betti, tuple(torsion))
