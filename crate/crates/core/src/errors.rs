//! Error type shared across the ledger, consensus, registry, escrow,
//! reputation, and simulator modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // Transaction admission.
    #[error("signature does not verify for the declared sender")]
    BadSignature,
    #[error("transaction {0} already known")]
    DuplicateTx(String),
    #[error("malformed payload: {0}")]
    MalformedPayload(String),

    // Block application.
    #[error("block does not link to the current tip")]
    BadLink,
    #[error("block producer is not the scheduled validator")]
    BadProducer,
    #[error("invalid transaction in block: {0}")]
    InvalidTxInBlock(String),
    #[error("transaction overspends its sender balance")]
    OverspendInBlock,

    // Staking and scheduling.
    #[error("no unlocked validators registered")]
    NoValidators,
    #[error("producer is not scheduled for this height")]
    NotScheduled,
    #[error("balance too low for the requested stake")]
    InsufficientBalance,
    #[error("stake is locked")]
    AlreadyLocked,
    #[error("address is not an unlocked validator")]
    UnknownValidator,

    // Product registry and challenges.
    #[error("product index already registered")]
    DuplicateIndex,
    #[error("challenge expiration must be at least 1")]
    ZeroExpiration,
    #[error("product index not registered")]
    UnknownProduct,
    #[error("pledge deposit below the configured minimum")]
    InsufficientDeposit,

    // Hash-time-lock contracts.
    #[error("caller does not own the asset")]
    NotOwner,
    #[error("content digest does not match the declared index")]
    HashMismatch,
    #[error("preimage does not hash to the contract lock")]
    BadPreimage,
    #[error("contract is not in the locked state")]
    NotLocked,
    #[error("contract expiration height has passed")]
    PastExpiration,
    #[error("contract has not reached its expiration height")]
    NotYetExpired,
    #[error("expiration height is not in the future")]
    ExpirationInPast,
    #[error("funds or asset already held by a lock")]
    AssetLocked,

    // Selection.
    #[error("every candidate is in the denied set")]
    AllDenied,

    // Simulator and I/O.
    #[error("invalid scenario config: {0}")]
    ConfigInvalid(String),
    #[error("i/o failure: {0}")]
    IoFailure(String),
    #[error("malformed chain dump at line {0}: {1}")]
    BadDump(usize, String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::IoFailure(e.to_string())
    }
}
