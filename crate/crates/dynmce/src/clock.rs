use std::sync::OnceLock;
use std::time::Instant;

/// Nanoseconds since the first call in this process. Usable as a core `Clock`.
pub fn monotonic_ns() -> u64 {
    static EPOCH: OnceLock<Instant> = OnceLock::new();
    let epoch = *EPOCH.get_or_init(Instant::now);
    u64::try_from(epoch.elapsed().as_nanos()).unwrap_or(u64::MAX)
}
