from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import p42, valid_pdas
from pdacache import (Demand, FileLibrary, Pda, PdaError, Scheme1Params, Scheme2Params, decode,
                      deliver, place, run_end_to_end, scheme1, scheme2, sweep_demands)
from pdacache.caching_sim import DecodeError, UserCache, all_demands, xor_bytes


@pytest.fixture
def lib2():
    return FileLibrary.random(2, 4, size=64, seed=1)


def test_library_padding():
    lib = FileLibrary.build([b"abcde", b"xy"], 4)
    assert lib.packet_len == 2
    assert lib.files == (b"abcde\0\0\0", b"xy\0\0\0\0\0\0")
    assert lib.original(1) == b"abcde" and lib.original(2) == b"xy"
    assert lib.packet(1, 3) == b"e\0"


def test_library_empty_rejected():
    with pytest.raises(PdaError):
        FileLibrary.build([], 4)


def test_example_placement(lib2):
    z1, z2 = place(p42(), lib2)
    assert set(z1.packets) == {(1, 1), (1, 3), (2, 1), (2, 3)}
    assert set(z2.packets) == {(1, 2), (1, 4), (2, 2), (2, 4)}
    assert z1.packets[2, 3] == lib2.packet(2, 3)
    assert z1.size_bytes == 2 * 2 * lib2.packet_len


def test_all_star_caches_everything():
    pda = Pda.from_rows([["*", "*"], ["*", "*"]])
    lib = FileLibrary.random(3, 2, seed=0)
    caches = place(pda, lib)
    assert all(len(c.packets) == 3 * 2 for c in caches)
    assert deliver(pda, lib, Demand((1, 3))) == []
    for k, want in ((1, 1), (2, 3)):
        assert decode(pda, k, caches[k - 1], [], Demand((1, 3))) == lib.original(want)


def test_scheme1_cache_counts():
    pda = scheme1(Scheme1Params(4, 1, 1))
    lib = FileLibrary.random(4, 4, size=64, seed=5)
    caches = place(pda, lib)
    assert [len(c.packets) for c in caches] == [4] * 4


@pytest.mark.parametrize("d, slots", [
    ((1, 2), [{(1, 2), (2, 1)}, {(1, 4), (2, 3)}]),
    ((2, 2), [{(2, 2), (2, 1)}, {(2, 4), (2, 3)}]),
])
def test_example_delivery(lib2, d, slots):
    msgs = deliver(p42(), lib2, Demand(d))
    assert [set(m.packet_ids(Demand(d))) for m in msgs] == slots
    for m, ids in zip(msgs, slots):
        assert m.payload == xor_bytes(*(lib2.packet(i, j) for i, j in ids))


def test_zero_files_give_zero_payloads():
    lib = FileLibrary.build([bytes(16)] * 4, 4)
    for m in deliver(scheme2(Scheme2Params(2, 2, 1)), lib, Demand((1, 2, 3, 4))):
        assert m.payload == bytes(lib.packet_len)


def test_example_decoding(lib2):
    d = Demand((1, 2))
    caches = place(p42(), lib2)
    msgs = deliver(p42(), lib2, d)
    assert decode(p42(), 1, caches[0], msgs, d) == lib2.original(1)
    assert decode(p42(), 2, caches[1], msgs, d) == lib2.original(2)
    # W_{1,2} = (W_{1,2} xor W_{2,1}) xor W_{2,1}
    assert xor_bytes(msgs[0].payload, caches[0].packets[2, 1]) == lib2.packet(1, 2)


def test_decode_detects_missing_packet(lib2):
    d = Demand((1, 2))
    msgs = deliver(p42(), lib2, d)
    starved = UserCache(1, {}, lib2.lengths, lib2.packet_len)
    with pytest.raises((DecodeError, KeyError)):
        decode(p42(), 1, starved, msgs, d)


def test_demand_out_of_range(lib2):
    with pytest.raises(PdaError, match="outside"):
        deliver(p42(), lib2, Demand((1, 3)))
    with pytest.raises(PdaError, match="entries"):
        deliver(p42(), lib2, Demand((1,)))


def test_invalid_pda_refused(lib2):
    with pytest.raises(PdaError, match="invalid"):
        place(Pda.from_rows([[1, 1], ["*", "*"], ["*", "*"], ["*", "*"]]), lib2)


def test_report_summary(lib2):
    rep = run_end_to_end(p42(), lib2, Demand((1, 2)))
    assert rep.summary() == "users_ok=11 S=2 rate=2/4 cache_bytes=64"
    assert rep.rate == Fraction(1, 2)


@pytest.mark.parametrize("pda, n", [
    (scheme1(Scheme1Params(4, 1, 1)), 4),
    (scheme2(Scheme2Params(2, 2, 1)), 4),
])
def test_exhaustive_demands(pda, n):
    lib = FileLibrary.random(n, pda.f, size=48, seed=9)
    count = 0
    for _, rep in sweep_demands(pda, lib):
        count += 1
        assert rep.all_ok
        assert rep.transmitted_bytes == pda.s * lib.packet_len
        assert rep.rate == Fraction(pda.s, pda.f)
    assert count == n ** pda.k


@settings(max_examples=40, deadline=None)
@given(valid_pdas(max_k=4, max_f=8), st.integers(1, 3), st.integers(0, 2 ** 32),
       st.integers(0, 40))
def test_every_demand_decodes(pda, n_files, seed, size):
    lib = FileLibrary.random(n_files, pda.f, size=size, seed=seed)
    z = pda.column_stars()[0]
    for d, rep in sweep_demands(pda, lib):
        assert rep.all_ok, d
        assert rep.transmitted_bytes == pda.s * lib.packet_len
        assert set(rep.cache_bytes) == {z * n_files * lib.packet_len}


def test_all_demands_count():
    assert len(list(all_demands(3, 2))) == 9
