use moeadde_core::operators::MutationConfig;
use moeadde_core::problems::ProblemId;
use sha2::{Digest, Sha256};

/// Seed of run `run` of `config` on `problem` with `m` objectives: the first
/// eight bytes (little endian) of SHA-256 over
/// `"{base}|{config}|{problem}|M{m}|{run}"`.
pub fn derive_seed(base: u64, config: &MutationConfig, problem: ProblemId, m: usize, run: usize) -> u64 {
    let text = format!("{base}|{config}|{problem}|M{m}|{run}");
    let digest = Sha256::digest(text.as_bytes());
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(bytes)
}
