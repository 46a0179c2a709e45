/// Size limits for the exhaustive parts of the library.
///
/// These are configuration, not mathematics: exceeding one yields
/// [`Error::Resource`](crate::Error::Resource), never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `n` for SYT/SSYT enumeration.
    pub enumeration: usize,
    /// Largest `n` for a full character table.
    pub characters: usize,
    /// Largest number of variables for orbit spans.
    pub orbit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 10,
            characters: 10,
            orbit: 8,
        }
    }
}

impl Caps {
    /// The same limit for every kind of enumeration.
    pub fn uniform(cap: usize) -> Self {
        Caps {
            enumeration: cap,
            characters: cap,
            orbit: cap,
        }
    }
}
