"""Run a PDA as an F-division coded caching scheme over real byte strings.

Files are zero-padded to a common length that is a multiple of ``F`` and cut
into ``F`` equal packets.  Placement stores packet ``j`` of every file at user
``k`` when cell ``(j, k)`` is a star; delivery sends one XOR per symbol; each
user strips the packets it already holds from the XORs that mention it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .pda_core import STAR, Pda, PdaError, validate

PacketId = tuple[int, int]  # (file i, packet j), both 1-based


class DecodeError(PdaError):
    """A user lacked a packet it needed; only reachable with an invalid PDA."""


def xor_bytes(*chunks: bytes) -> bytes:
    if not chunks:
        raise ValueError("nothing to XOR")
    n = len(chunks[0])
    acc = int.from_bytes(chunks[0], "big")
    for c in chunks[1:]:
        if len(c) != n:
            raise ValueError("XOR operands differ in length")
        acc ^= int.from_bytes(c, "big")
    return acc.to_bytes(n, "big")


@dataclass(frozen=True)
class FileLibrary:
    """``N`` files padded to ``F * packet_len`` bytes each.

    ``lengths`` keeps the original sizes so padding can be stripped after
    decoding.  ``packet_len`` is at least 1 even for an all-empty library.
    """

    files: tuple[bytes, ...]
    lengths: tuple[int, ...]
    f: int
    packet_len: int

    @classmethod
    def build(cls, files: Sequence[bytes], f: int) -> "FileLibrary":
        if not files:
            raise PdaError("library must hold at least one file")
        if f < 1:
            raise PdaError(f"F must be positive, got {f}")
        longest = max(len(w) for w in files)
        packet_len = max(1, -(-longest // f))
        size = packet_len * f
        padded = tuple(bytes(w) + bytes(size - len(w)) for w in files)
        return cls(padded, tuple(len(w) for w in files), f, packet_len)

    @classmethod
    def random(cls, n_files: int, f: int, size: int = 64, seed: int = 0) -> "FileLibrary":
        """Seeded pseudo-random files of ``size`` bytes each."""
        rng = random.Random(seed)
        return cls.build([rng.randbytes(size) for _ in range(n_files)], f)

    @property
    def n_files(self) -> int:
        return len(self.files)

    def packet(self, i: int, j: int) -> bytes:
        start = (j - 1) * self.packet_len
        return self.files[i - 1][start:start + self.packet_len]

    def original(self, i: int) -> bytes:
        return self.files[i - 1][:self.lengths[i - 1]]


@dataclass(frozen=True)
class UserCache:
    user: int
    packets: Mapping[PacketId, bytes]
    file_lengths: tuple[int, ...]
    packet_len: int

    @property
    def size_bytes(self) -> int:
        return len(self.packets) * self.packet_len


@dataclass(frozen=True)
class Demand:
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))

    def check(self, n_files: int, k_users: int) -> None:
        if len(self.d) != k_users:
            raise PdaError(f"demand has {len(self.d)} entries for {k_users} users")
        bad = [x for x in self.d if not 1 <= x <= n_files]
        if bad:
            raise PdaError(f"demand entries {bad} outside 1..{n_files}")

    def __getitem__(self, k: int) -> int:
        """File requested by user ``k`` (1-based)."""
        return self.d[k - 1]


def all_demands(n_files: int, k_users: int) -> Iterator[Demand]:
    for d in product(range(1, n_files + 1), repeat=k_users):
        yield Demand(d)


@dataclass(frozen=True)
class BroadcastMessage:
    symbol: int
    payload: bytes
    contributors: tuple[tuple[int, int], ...]  # (j, k) cells carrying the symbol

    def packet_ids(self, d: Demand) -> tuple[PacketId, ...]:
        """Which packets were XOR-ed together under demand ``d``."""
        return tuple((d[k], j) for j, k in self.contributors)


def _require_valid(pda: Pda) -> None:
    report = validate(pda)
    if not report.overall_valid:
        raise PdaError(f"invalid PDA: {report.first_witness().describe()}")


def place(pda: Pda, lib: FileLibrary) -> list[UserCache]:
    _require_valid(pda)
    if lib.f != pda.f:
        raise PdaError(f"library split into {lib.f} packets, PDA has F={pda.f}")
    caches = []
    for k in range(1, pda.k + 1):
        packets = {(i, j): lib.packet(i, j)
                   for j in range(1, pda.f + 1) if pda[j, k] is STAR
                   for i in range(1, lib.n_files + 1)}
        caches.append(UserCache(k, packets, lib.lengths, lib.packet_len))
    return caches


def deliver(pda: Pda, lib: FileLibrary, d: Demand) -> list[BroadcastMessage]:
    """One XOR per symbol, in symbol order."""
    _require_valid(pda)
    return _broadcast(pda, lib, d)


def _broadcast(pda: Pda, lib: FileLibrary, d: Demand) -> list[BroadcastMessage]:
    d.check(lib.n_files, pda.k)
    msgs = []
    for s, cells in sorted(pda.symbol_cells().items()):
        payload = xor_bytes(*(lib.packet(d[k], j) for j, k in cells))
        msgs.append(BroadcastMessage(s, payload, tuple(cells)))
    return msgs


def decode(pda: Pda, k: int, cache: UserCache, msgs: Sequence[BroadcastMessage],
           d: Demand) -> bytes:
    """Recover the file user ``k`` asked for from its cache and the broadcasts."""
    want = d[k]
    by_symbol = {m.symbol: m for m in msgs}
    packets = []
    for j in range(1, pda.f + 1):
        cell = pda[j, k]
        if cell is STAR:
            packets.append(cache.packets[want, j])
            continue
        msg = by_symbol[cell]
        mine = [(jj, kk) for jj, kk in msg.contributors if kk == k]
        assert mine == [(j, k)], f"user {k} appears {len(mine)} times under symbol {cell}"
        known = []
        for jj, kk in msg.contributors:
            if kk == k:
                continue
            pid = (d[kk], jj)
            if pid not in cache.packets:
                raise DecodeError(f"user {k} lacks packet W_{pid[0]},{pid[1]} for symbol {cell}")
            known.append(cache.packets[pid])
        packets.append(xor_bytes(msg.payload, *known))
    return b"".join(packets)[:cache.file_lengths[want - 1]]


@dataclass(frozen=True)
class SimReport:
    users_ok: tuple[bool, ...]
    s: int
    f: int
    rate: Fraction
    cache_bytes: tuple[int, ...]
    transmitted_bytes: int

    @property
    def all_ok(self) -> bool:
        return all(self.users_ok)

    def summary(self) -> str:
        mask = "".join("1" if ok else "0" for ok in self.users_ok)
        return f"users_ok={mask} S={self.s} rate={self.s}/{self.f} cache_bytes={self.cache_bytes[0]}"


def _report(pda: Pda, lib: FileLibrary, caches: list[UserCache], msgs: list[BroadcastMessage],
            d: Demand) -> SimReport:
    ok = tuple(decode(pda, k, caches[k - 1], msgs, d) == lib.original(d[k])
               for k in range(1, pda.k + 1))
    return SimReport(
        users_ok=ok,
        s=len(msgs),
        f=pda.f,
        rate=Fraction(len(msgs), pda.f),
        cache_bytes=tuple(c.size_bytes for c in caches),
        transmitted_bytes=sum(len(m.payload) for m in msgs),
    )


def run_end_to_end(pda: Pda, lib: FileLibrary, d: Demand) -> SimReport:
    caches = place(pda, lib)
    return _report(pda, lib, caches, deliver(pda, lib, d), d)


def sweep_demands(pda: Pda, lib: FileLibrary,
                  demands: Iterable[Demand] | None = None) -> Iterator[tuple[Demand, SimReport]]:
    """Run every demand (all ``N^K`` by default), placing the caches only once."""
    caches = place(pda, lib)
    if demands is None:
        demands = all_demands(lib.n_files, pda.k)
    for d in demands:
        yield d, _report(pda, lib, caches, _broadcast(pda, lib, d), d)
