//! Sign and normalization conventions, recorded in one place.
//!
//! Reports carry a fingerprint of this table; any change to a convention
//! changes the fingerprint. The four-form spectrum check is the arbiter for
//! the Clifford sign and the 2-form normalization: with the choices below the
//! measured spectrum is exactly `mu_r = 6m - 4r(r+2)`.

use alloc::string::String;
use alloc::vec::Vec;

use sha2::{Digest, Sha256};

/// (key, value) table of every recorded convention.
pub fn entries() -> Vec<(&'static str, &'static str)> {
    alloc::vec![
        ("clifford_sign", "v . v = -|v|^2 Id (generators square to -Id)"),
        ("gamma_construction", "tensor-product recursion over Pauli blocks; entries in {0, +-1, +-i}"),
        ("spinor_basis", "lexicographic tensor basis of the recursion"),
        ("two_form_action", "F . = sum_{i<j} F_ij g_i g_j (no extra 1/2 on the i<j sum)"),
        ("quaternion_frame", "J_1, J_2, J_3 = right multiplication by i, j, and -k per quaternionic block (1,i,j,k); J_1 J_2 = +J_3"),
        ("epsilon_orientation", "eps_abc = +1 on even permutations of (1,2,3); the all-negated frame satisfies the odd-permutation relation instead"),
        ("kaehler_forms", "(Omega_a)_ij = <J_a e_i, e_j> = (J_a^T)_ij"),
        ("connection_one_forms", "w_a^b = 0: the frame is constant on the flat fiber"),
        ("spin_lift", "lift(A) = 1/4 sum_ij A_ij g_j g_i, so [lift(A), v.] = (Av)."),
        ("sp1_casimir", "C_1 = sum_a (J_a x Id + Id x lift(J_a))^2; scalar -s(s+2) on first label s"),
        ("tensor_basis_order", "basis e_i x u_j of Q x S_r ordered i-major (column i*d + j)"),
        ("jay_symmetry_sign", "+1: J(X) is Hermitian, (J(X)phi, psi) = (phi, J(X)psi)"),
        ("rng", "chacha8, per-check streams derived from the master seed by FNV-1a over (check_id, m, r)"),
    ]
}

/// SHA-256 over the canonical `key=value` serialization, hex-encoded.
pub fn fingerprint() -> String {
    let mut h = Sha256::new();
    for (k, v) in entries() {
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
        h.update(b"\n");
    }
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        use core::fmt::Write;
        let _ = write!(out, "{byte:02x}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_stable_hex() {
        let f1 = fingerprint();
        let f2 = fingerprint();
        assert_eq!(f1, f2);
        assert_eq!(f1.len(), 64);
        assert!(f1.chars().all(|c| c.is_ascii_hexdigit()));
    }
}
