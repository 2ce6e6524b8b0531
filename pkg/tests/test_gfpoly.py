import random

import pytest

from fptlib import FieldSpec, UPoly, ValidationError


class TestFieldConstruction:
    def test_deterministic_moduli(self):
        assert FieldSpec(3, 2).modulus == (1, 0, 1)      # t^2 + 1
        assert FieldSpec(2, 2).modulus == (1, 1, 1)      # t^2 + t + 1
        assert FieldSpec(2, 3).modulus == (1, 1, 0, 1)   # t^3 + t + 1
        assert FieldSpec(5, 1).modulus == (0, 1)

    def test_rejects_bad_input(self):
        with pytest.raises(ValidationError):
            FieldSpec(6)
        with pytest.raises(ValidationError):
            FieldSpec(3, 0)
        with pytest.raises(ValidationError):
            FieldSpec(2, 2, modulus=(1, 0, 1))  # t^2+1 = (t+1)^2 over F_2

    def test_same_spec_compares_equal(self):
        assert FieldSpec(3, 2) == FieldSpec(3, 2)
        assert FieldSpec(3, 2) != FieldSpec(3, 1)


class TestFieldArithmetic:
    def test_f9_generator(self):
        K = FieldSpec(3, 2)
        t = K.gen()
        assert t * t == K.elem(2)          # t^2 = -1
        assert t.frobenius() == 2 * t      # t^3 = -t
        assert str(2 * t + 1) == "2*t+1"

    def test_inverse_in_f7(self):
        K = FieldSpec(7)
        assert K.elem(2).inverse() == K.elem(4)
        with pytest.raises(ValidationError):
            K.zero().inverse()

    @pytest.mark.parametrize("p,k", [(2, 1), (7, 1), (2, 4), (3, 2), (5, 2), (97, 2)])
    def test_axioms_randomized(self, p, k):
        # q up to 9409 exercises both the table and the on-the-fly path
        K = FieldSpec(p, k)
        rng = random.Random(p * 100 + k)
        for _ in range(120):
            a, b, c = (K.random_elem(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            if a:
                assert a * a.inverse() == K.one()
            assert a + (-a) == K.zero()

    @pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (7, 2)])
    def test_frobenius_iterates_to_identity(self, p, k):
        K = FieldSpec(p, k)
        for a in K.elements():
            b = a
            for _ in range(k):
                b = b.frobenius()
            assert b == a

    def test_embedding_prime_subfield(self):
        K3, K9 = FieldSpec(3), FieldSpec(3, 2)
        emb = K9.embedding_from(K3)
        for x in range(3):
            for y in range(3):
                assert emb((x + y) % 3) == K9.addi(emb(x), emb(y))
                assert emb(x * y % 3) == K9.muli(emb(x), emb(y))

    def test_embedding_proper_tower(self):
        K4, K16 = FieldSpec(2, 2), FieldSpec(2, 4)
        emb = K16.embedding_from(K4)
        for a in range(4):
            for b in range(4):
                assert emb(K4.muli(a, b)) == K16.muli(emb(a), emb(b))
                assert emb(K4.addi(a, b)) == K16.addi(emb(a), emb(b))


class TestUPoly:
    def test_gcd_examples(self):
        K7 = FieldSpec(7)
        assert UPoly(K7, (6, 0, 1)).gcd(UPoly(K7, (6, 1))) == UPoly(K7, (6, 1))
        K3 = FieldSpec(3)
        assert UPoly(K3, (0, 1, 0, 1)).gcd(UPoly(K3, (1, 0, 1))) == UPoly(K3, (1, 0, 1))
        f = UPoly(K7, (2, 4))
        assert f.gcd(UPoly.zero(K7)) == f.monic()

    def test_squarefree_examples(self):
        assert UPoly(FieldSpec(5), (0, 1, 1)).is_squarefree()            # u^2+u
        assert not UPoly(FieldSpec(3), (1, 0, 0, 1)).is_squarefree()     # (u+1)^3
        assert UPoly(FieldSpec(3), (1, 0, 1)).is_squarefree()            # irreducible
        with pytest.raises(ValidationError):
            UPoly.zero(FieldSpec(3)).is_squarefree()

    def test_square_never_squarefree(self):
        rng = random.Random(9)
        for _ in range(100):
            K = FieldSpec(rng.choice([2, 3, 5]), rng.choice([1, 2]))
            f = UPoly(K, [rng.randrange(K.q) for _ in range(rng.randrange(2, 5))] + [1])
            assert not (f * f).is_squarefree()

    def test_roots_examples(self):
        K3, K9 = FieldSpec(3), FieldSpec(3, 2)
        assert [r.enc for r in UPoly(K3, (2, 0, 1)).roots_in()] == [1, 2]  # a^2+2
        assert UPoly(K3, (1, 0, 1)).roots_in() == []
        assert len(UPoly(K3, (1, 0, 1)).roots_in(K9)) == 2
        K7 = FieldSpec(7)
        assert [r.enc for r in UPoly(K7, (4, 1)).roots_in()] == [3]       # u + 4

    def test_roots_evaluate_to_zero(self):
        rng = random.Random(10)
        for _ in range(60):
            K = FieldSpec(rng.choice([3, 5, 7]), rng.choice([1, 2]))
            f = UPoly(K, [rng.randrange(K.q) for _ in range(4)] + [1])
            roots = f.roots_in()
            assert len(roots) <= f.degree
            for r in roots:
                assert f(r) == K.zero()

    def test_roots_in_large_field_splitting_path(self):
        # q = 3^13 > 10^6 forces the powmod + random-splitting route
        K = FieldSpec(3, 13)
        a, b = K.elem((1, 1, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 1)), K.elem((2, 2, 1))
        f = UPoly(K, (0, 1)) - UPoly.const(K, a)
        g = UPoly(K, (0, 1)) - UPoly.const(K, b)
        h = f * g * UPoly(K, tuple([1] + [0] * 12 + [1]))  # extra high-degree factor
        roots = {r.enc for r in h.roots_in()}
        assert {a.enc, b.enc} <= roots

    def test_even_char_large_field_splitting(self):
        K = FieldSpec(2, 21)  # q = 2097152 > 10^6
        vals = [K.elem((1, 0, 1)), K.elem((0, 1, 1, 1)), K.elem((1,))]
        poly = UPoly.one(K)
        for v in vals:
            poly = poly * (UPoly(K, (0, 1)) - UPoly.const(K, v))
        assert {r.enc for r in poly.roots_in()} == {v.enc for v in vals}
