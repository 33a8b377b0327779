//! Small shared helpers.

/// Runs `f` on a thread with a large stack. Failure branches shrink the
/// active set by a single vertex, so recursion depth can reach the vertex
/// count; the default test-thread stack is too tight for that.
pub(crate) fn with_big_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    const STACK_BYTES: usize = 64 * 1024 * 1024;
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(STACK_BYTES)
            .spawn_scoped(scope, f)
            .expect("failed to spawn solver thread")
            .join()
            .expect("solver thread panicked")
    })
}
