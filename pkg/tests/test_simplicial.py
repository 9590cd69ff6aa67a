"""Subcomplex lattice, collapsibility, enumeration, oracle agreement."""

from __future__ import annotations

import random

import pytest

from whcalc.simplicial import (EmptyIntersectionError, SubComplex,
                               boundary, boundary_face, codegeneracy_image,
                               enumerate_contractible_subcomplexes,
                               enumerate_subcomplexes, face_from_vertices,
                               full_simplex, horn, is_contractible,
                               single_face)

from _oracles import is_acyclic_and_connected


def test_standard_complexes():
    assert full_simplex(1).faces == {0b01, 0b10, 0b11}
    assert boundary_face(2, 1).faces == {0b001, 0b100, 0b101}
    assert horn(2, 0) == single_face(2, 0b011).union(single_face(2, 0b101))
    with pytest.raises(IndexError):
        horn(2, 3)
    with pytest.raises(IndexError):
        boundary_face(2, -1)


def test_downward_closure_enforced():
    with pytest.raises(ValueError):
        SubComplex(2, frozenset({0b011}))
    SubComplex.closure(2, [0b011])  # fine


def test_lattice_ops():
    d1, d2 = boundary_face(2, 1), boundary_face(2, 2)
    assert d1.union(d2) == horn(2, 0)
    assert d1.intersection(d2) == single_face(2, 0b001)
    assert horn(2, 0).is_subcomplex_of(full_simplex(2))
    with pytest.raises(EmptyIntersectionError):
        single_face(2, 0b001).intersection(single_face(2, 0b010))
    with pytest.raises(ValueError):
        full_simplex(1).union(full_simplex(2))


def test_closure_under_lattice_ops_randomized():
    # the SubComplex constructor rejects non-closed face sets, so simply
    # forming unions/intersections asserts closure is preserved
    rng = random.Random(9)
    pool = enumerate_subcomplexes(3)
    for _ in range(300):
        a, b = rng.choice(pool), rng.choice(pool)
        u = a.union(b)
        assert a.is_subcomplex_of(u) and b.is_subcomplex_of(u)
        try:
            i = a.intersection(b)
            assert i.is_subcomplex_of(a) and i.is_subcomplex_of(b)
        except EmptyIntersectionError:
            assert not (a.faces & b.faces)


def test_contractibility_examples():
    assert is_contractible(full_simplex(3))
    assert not is_contractible(boundary(2))
    two_points = SubComplex(1, frozenset({0b01, 0b10}))
    assert not is_contractible(two_points)
    assert is_contractible(horn(3, 2))
    assert not is_contractible(boundary(3))


def test_enumeration_counts():
    assert len(enumerate_contractible_subcomplexes(0)) == 1
    assert len(enumerate_contractible_subcomplexes(1)) == 3
    assert len(enumerate_contractible_subcomplexes(2)) == 10
    with pytest.raises(ValueError):
        enumerate_contractible_subcomplexes(4)


def test_enumeration_is_sorted_and_euler_one():
    for p in range(3):
        ks = enumerate_contractible_subcomplexes(p)
        keys = [k.canonical_key() for k in ks]
        assert keys == sorted(keys)
        assert all(k.euler_characteristic() == 1 for k in ks)


def test_oracle_agreement_delta3_exhaustive():
    for k in enumerate_subcomplexes(3):
        assert is_contractible(k) == is_acyclic_and_connected(k), str(k)


def test_oracle_agreement_five_vertices():
    # every subcomplex on at most 5 vertices: the ambient 4-simplex
    disagreements = 0
    for k in enumerate_subcomplexes(4):
        if is_contractible(k) != is_acyclic_and_connected(k):
            disagreements += 1
    assert disagreements == 0


def test_codegeneracy_closure_low_ambient():
    # the enumerated contractible poset is closed under codegeneracy
    # images in the range the functor pullbacks use (ambient <= 2)
    for p in (1, 2):
        allowed = {k.canonical_key()
                   for k in enumerate_contractible_subcomplexes(p - 1)}
        for k in enumerate_contractible_subcomplexes(p):
            for i in range(p):
                img = codegeneracy_image(k, i)
                assert img.canonical_key() in allowed


def test_codegeneracy_sends_faces_to_faces():
    # the corrected degeneracy only ever consumes face values, and the
    # image of a face closure is again a face closure at every ambient
    for p in (1, 2, 3):
        top = (1 << (p + 1)) - 1
        for face in range(1, top + 1):
            for i in range(p):
                img = codegeneracy_image(single_face(p, face), i)
                assert len(img.maximal_faces()) == 1


def test_euler_characteristic_and_connectivity():
    assert boundary(2).euler_characteristic() == 0
    assert full_simplex(2).euler_characteristic() == 1
    assert boundary(3).is_connected()
    assert not SubComplex(2, frozenset({0b001, 0b010})).is_connected()


def test_serialization_round_trip():
    k = horn(2, 0)
    data = k.to_dict()
    assert data == {"p": 2, "faces": ["0", "1", "01", "2", "02"]}
    assert SubComplex.from_dict(data) == k


def test_face_helpers():
    assert face_from_vertices([0, 2]) == 0b101
    with pytest.raises(ValueError):
        face_from_vertices([])
