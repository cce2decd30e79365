//! Deterministic per-sample random streams.
//!
//! Every sample index gets its own ChaCha8 stream derived from the master
//! seed with a splitmix64 expansion, so batches are reproducible
//! byte-for-byte no matter how the indices are scheduled across threads.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// 32-byte ChaCha seed for sample `index` under `master_seed`.
pub fn stream_seed(master_seed: u64, index: u64) -> [u8; 32] {
    // Decorrelate the (seed, index) pair before expanding, so that
    // neighboring master seeds do not produce shifted copies of the same
    // stream family.
    let mut state = master_seed ^ {
        let mut s = index;
        splitmix64(&mut s)
    };
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    seed
}

/// The random generator for sample `index` under `master_seed`.
pub fn sample_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(stream_seed(master_seed, index))
}
