import numpy as np
import pytest

from dqeig.adjoint import adjoint
from dqeig.bench import (
    PENTAGON_REFERENCE_EIGENVALUES,
    pentagon_fixture,
    random_hermitian,
    synth_known_spectrum,
)
from dqeig.dual_eig import (
    eddcam_ea,
    eig_dual_complex_hermitian,
    orthogonalize_eigenvectors,
)
from dqeig.errors import ClusterInstability, NotAnEigenvector, NotHermitian
from dqeig.matrices import DualComplexMatrix, DualQuaternionMatrix, DualQuaternionVector
from dqeig.scalars import DualNumber, DualQuaternion, Quaternion


def dual_diag(entries):
    """Diagonal dual complex matrix from (st, du) pairs."""
    st = np.diag([complex(a) for a, _ in entries])
    du = np.diag([complex(b) for _, b in entries])
    return DualComplexMatrix(st, du)


def dq_diag(entries):
    """Diagonal dual quaternion matrix from DualNumber entries."""
    n = len(entries)
    z = np.zeros((n, n))
    return DualQuaternionMatrix(
        np.diag([e.st for e in entries]), z, np.diag([e.du for e in entries]), z
    )


def assert_decomposition_valid(p, dec, tol=1e-9):
    u, sigma = dec.u_hat, dec.sigma
    n = p.rows
    scale = max(1.0, p.norm_fr())
    ident = DualComplexMatrix.identity(n)
    assert (u.conj_transpose() @ u).max_abs_diff(ident) <= tol * scale
    d = u.conj_transpose() @ p @ u
    target = dual_diag([(s.st, s.du) for s in sigma])
    assert d.max_abs_diff(target) <= tol * scale


class TestDualComplexEigendecomposition:
    def test_already_diagonal(self):
        p = dual_diag([(2, 1), (2, 1), (1, 3), (1, 3)])
        dec = eig_dual_complex_hermitian(p)
        assert [(s.st, s.du) for s in dec.sigma] == [(2, 1), (2, 1), (1, 3), (1, 3)]
        # the transform reduces to a within-cluster permutation of the identity
        assert np.all(np.isin(np.round(np.abs(dec.u_hat.st), 12), [0.0, 1.0]))
        assert not dec.u_hat.du.any()
        assert_decomposition_valid(p, dec, tol=1e-14)

    def test_pentagon_adjoint_doubles_each_eigenvalue(self):
        dec = eig_dual_complex_hermitian(adjoint(pentagon_fixture()))
        assert len(dec.sigma) == 10
        for k, ref in enumerate(PENTAGON_REFERENCE_EIGENVALUES):
            for s in dec.sigma[2 * k : 2 * k + 2]:
                assert abs(s.st - ref.st) <= 5e-4
                assert abs(s.du - ref.du) <= 5e-4

    def test_synth_round_trip(self):
        sigma = (DualNumber(2.5, 0.3), DualNumber(1.0, -1.0), DualNumber(-0.5, 2.0))
        q, _ = synth_known_spectrum(3, sigma, 99)
        p = adjoint(q)
        dec = eig_dual_complex_hermitian(p)
        assert_decomposition_valid(p, dec)
        got = [(s.st, s.du) for s in dec.sigma]
        want = sorted(
            [(s.st, s.du) for s in sigma for _ in range(2)], reverse=True
        )
        assert np.allclose(got, want, atol=1e-8)

    def test_random_adjoint_unitarity_and_diagonalization(self):
        rng = np.random.default_rng(41)
        for n in (2, 4, 7):
            p = adjoint(random_hermitian(n, rng))
            assert_decomposition_valid(p, eig_dual_complex_hermitian(p))

    def test_dual_offdiagonal_cancellation(self):
        # the transformed dual part must vanish off the diagonal blocks:
        # Q_ij + lam_j T_ji^* + lam_i T_ij = O
        rng = np.random.default_rng(42)
        for _ in range(25):
            p = adjoint(random_hermitian(4, rng))
            dec = eig_dual_complex_hermitian(p)
            du = (dec.u_hat.conj_transpose() @ p @ dec.u_hat).du
            off = du - np.diag(np.diag(du))
            assert np.abs(off).max() <= 1e-10 * max(1.0, p.norm_fr())

    def test_rejects_non_hermitian(self):
        bad = DualComplexMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(NotHermitian):
            eig_dual_complex_hermitian(bad)

    def test_cluster_instability(self):
        # gap of 5e-8 with tol_group 1e-8: separate clusters, closer than 10x tol
        p = dual_diag([(1.0, 0.0), (1.0 - 5e-8, 0.0)])
        with pytest.raises(ClusterInstability):
            eig_dual_complex_hermitian(p, tol_group=1e-8)


class TestOrthogonalize:
    @staticmethod
    def _fixture():
        sigma = (DualNumber(2, 1), DualNumber(2, 1), DualNumber(-1, 0))
        q, _ = synth_known_spectrum(3, sigma, 7)
        res = eddcam_ea(q)
        lam, vecs = res.pairs[0]
        assert len(vecs) == 2
        return q, lam, list(vecs)

    def test_duplicate_collapses(self):
        q, lam, (v, _) = self._fixture()
        out = orthogonalize_eigenvectors([v, v], q, lam)
        assert len(out) == 1
        assert abs(out[0].norm_2().st - 1.0) <= 1e-12

    def test_orthonormal_pair_unchanged(self):
        q, lam, vecs = self._fixture()
        out = orthogonalize_eigenvectors(vecs, q, lam)
        assert len(out) == 2
        for a, b in zip(out, vecs):
            assert (a - b).norm_2r() <= 1e-10

    def test_mixture_recovers_orthonormal_span(self):
        q, lam, (v, u) = self._fixture()
        mixed = v + u.scale_right(DualQuaternion(Quaternion(0.5)))
        out = orthogonalize_eigenvectors([v, mixed], q, lam)
        assert len(out) == 2
        for i, a in enumerate(out):
            for j, b in enumerate(out):
                d = a.dot(b)
                expect = 1.0 if i == j else 0.0
                assert abs(d.st.w - expect) <= 1e-10
                assert max(abs(d.st.x), abs(d.st.y), abs(d.st.z)) <= 1e-10
                assert d.du.magnitude() <= 1e-10
            res = (q @ a - a.scale_right(lam)).norm_2r()
            assert res <= 1e-9 * max(1.0, q.norm_fr())

    def test_rejects_non_eigenvector(self):
        q, lam, (v, _) = self._fixture()
        junk = DualQuaternionVector.basis(3, 0) + DualQuaternionVector.basis(3, 1)
        with pytest.raises(NotAnEigenvector):
            orthogonalize_eigenvectors([v, junk], q, lam)


class TestEddcamEa:
    def test_pentagon(self):
        res = eddcam_ea(pentagon_fixture())
        flat = res.eigenvalues()
        assert len(flat) == 5
        for got, ref in zip(flat, PENTAGON_REFERENCE_EIGENVALUES):
            assert abs(got.st - ref.st) <= 5e-4
            assert abs(got.du - ref.du) <= 5e-4
        assert res.residual <= 1e-10

    def test_diagonal_with_multiplicity(self):
        q = dq_diag([DualNumber(3, 1), DualNumber(3, 1), DualNumber(1, 0)])
        res = eddcam_ea(q)
        assert [(lam.st, lam.du, len(v)) for lam, v in res.pairs] == [
            (3.0, 1.0, 2),
            (1.0, 0.0, 1),
        ]

    def test_synth_n6_recovery(self):
        rng = np.random.default_rng(43)
        sts = np.sort(rng.uniform(-3, 3, 6))[::-1]
        while np.min(-np.diff(sts)) < 0.2:
            sts = np.sort(rng.uniform(-3, 3, 6))[::-1]
        sigma = tuple(DualNumber(float(s), float(d)) for s, d in zip(sts, rng.uniform(-2, 2, 6)))
        q, _ = synth_known_spectrum(6, sigma, 44)
        res = eddcam_ea(q)
        got = res.eigenvalues()
        assert len(got) == 6
        for g, s in zip(got, sorted(sigma, key=lambda t: (t.st, t.du), reverse=True)):
            assert abs(g.st - s.st) <= 1e-8 and abs(g.du - s.du) <= 1e-8

    def test_eigenpair_residuals(self):
        q = random_hermitian(6, np.random.default_rng(45))
        res = eddcam_ea(q)
        bound = 1e-9 * max(1.0, q.norm_fr())
        for lam, vecs in res.pairs:
            for v in vecs:
                assert (q @ v - v.scale_right(lam)).norm_2r() <= bound

    def test_full_orthonormality(self):
        q = random_hermitian(5, np.random.default_rng(46))
        vecs = eddcam_ea(q).eigenvectors()
        for i, a in enumerate(vecs):
            for j, b in enumerate(vecs):
                d = a.dot(b)
                expect = 1.0 if i == j else 0.0
                assert abs(d.st.w - expect) <= 1e-9
                assert max(abs(d.st.x), abs(d.st.y), abs(d.st.z)) <= 1e-9
                assert d.du.magnitude() <= 1e-9

    def test_reconstruction(self):
        q = random_hermitian(6, np.random.default_rng(47))
        res = eddcam_ea(q)
        recon = DualQuaternionMatrix.zeros(6, 6)
        for lam, vecs in res.pairs:
            for v in vecs:
                recon = recon + v.outer(v) * lam
        assert (q - recon).norm_fr() <= 1e-8 * max(1.0, q.norm_fr())

    def test_even_adjoint_multiplicity(self):
        q = random_hermitian(5, np.random.default_rng(48))
        dec = eig_dual_complex_hermitian(adjoint(q))
        seen = {}
        for s in dec.sigma:
            key = (round(s.st, 9), round(s.du, 9))
            seen[key] = seen.get(key, 0) + 1
        assert all(count % 2 == 0 for count in seen.values())

    def test_phase_canonicalization_deterministic(self):
        q = random_hermitian(4, np.random.default_rng(49))
        a = eddcam_ea(q).eigenvectors()
        b = eddcam_ea(q).eigenvectors()
        for x, y in zip(a, b):
            assert (x - y).norm_2r() <= 1e-13
        for x in a:
            mags = [x.entry(i).st.magnitude() for i in range(x.n)]
            top = x.entry(int(np.argmax(mags)))
            # the anchor entry is a nonnegative dual number
            assert top.st.w > 0
            assert max(abs(top.st.x), abs(top.st.y), abs(top.st.z)) <= 1e-12
            assert max(abs(top.du.x), abs(top.du.y), abs(top.du.z)) <= 1e-12

    def test_descending_order(self):
        q = random_hermitian(7, np.random.default_rng(50))
        lams = eddcam_ea(q).eigenvalues()
        for a, b in zip(lams, lams[1:]):
            assert (a.st, a.du) >= (b.st, b.du)

    def test_rejects_non_hermitian(self):
        m = DualQuaternionMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]), np.zeros((2, 2)))
        with pytest.raises(NotHermitian):
            eddcam_ea(m)
