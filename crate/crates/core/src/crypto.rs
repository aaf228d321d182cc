//! Hashing, addresses, and transaction signing.
//!
//! Every 32-byte digest in the system is SHA-256. Accounts are identified by
//! the digest of their Ed25519 public key; the all-zero address is the
//! distinguished SYSTEM account, which has no private key and whose
//! transactions are validated by consensus rules instead of a signature.

use ed25519_dalek::{Signer, Verifier};
use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};
use std::fmt;

pub const DIGEST_LEN: usize = 32;
pub const SIGNATURE_LEN: usize = 64;
pub const PUBLIC_KEY_LEN: usize = 32;

/// A SHA-256 digest.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Digest(pub [u8; DIGEST_LEN]);

impl Digest {
    pub const ZERO: Digest = Digest([0u8; DIGEST_LEN]);

    pub fn as_bytes(&self) -> &[u8; DIGEST_LEN] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Option<Digest> {
        let raw = hex::decode(s).ok()?;
        let arr: [u8; DIGEST_LEN] = raw.try_into().ok()?;
        Some(Digest(arr))
    }
}

impl fmt::Debug for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", &self.to_hex()[..12])
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Computes the SHA-256 digest of `data`.
pub fn sha256(data: &[u8]) -> Digest {
    let mut hasher = Sha256::new();
    hasher.update(data);
    Digest(hasher.finalize().into())
}

// Chain dumps carry digests, addresses, keys, and signatures as lowercase
// hex strings.
macro_rules! hex_serde {
    ($ty:ident, $len:expr) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&hex::encode(self.0))
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                let raw = hex::decode(&text).map_err(serde::de::Error::custom)?;
                let arr: [u8; $len] = raw
                    .try_into()
                    .map_err(|_| serde::de::Error::custom("wrong byte length"))?;
                Ok($ty(arr))
            }
        }
    };
}

hex_serde!(Digest, DIGEST_LEN);
hex_serde!(Address, DIGEST_LEN);
hex_serde!(SignatureBytes, SIGNATURE_LEN);

/// Account identifier: digest of the account's public key.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Address(pub [u8; DIGEST_LEN]);

/// The SYSTEM account (all-zero bytes). Holds escrowed value and sends
/// consensus-mandated transactions; it never has a private key.
pub const SYSTEM: Address = Address([0u8; DIGEST_LEN]);

impl Address {
    pub fn is_system(&self) -> bool {
        *self == SYSTEM
    }

    pub fn as_bytes(&self) -> &[u8; DIGEST_LEN] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Option<Address> {
        Digest::from_hex(s).map(|d| Address(d.0))
    }

    pub fn from_public_key(pk: &PublicKey) -> Address {
        Address(sha256(&pk.0).0)
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", &self.to_hex()[..12])
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Ed25519 public key bytes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PublicKey(pub [u8; PUBLIC_KEY_LEN]);

hex_serde!(PublicKey, PUBLIC_KEY_LEN);

/// Detached Ed25519 signature bytes. The all-zero signature marks unsigned
/// SYSTEM transactions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignatureBytes(pub [u8; SIGNATURE_LEN]);

impl SignatureBytes {
    pub const ZERO: SignatureBytes = SignatureBytes([0u8; SIGNATURE_LEN]);
}

/// A signing identity: Ed25519 keypair plus the derived address.
#[derive(Clone)]
pub struct KeyPair {
    signing: ed25519_dalek::SigningKey,
    public: PublicKey,
    address: Address,
}

impl KeyPair {
    /// Derives a keypair from an arbitrary 32-byte secret.
    pub fn from_secret(secret: [u8; 32]) -> KeyPair {
        let signing = ed25519_dalek::SigningKey::from_bytes(&secret);
        let public = PublicKey(signing.verifying_key().to_bytes());
        let address = Address::from_public_key(&public);
        KeyPair { signing, public, address }
    }

    /// Derives a reproducible keypair from a small integer seed. Test
    /// fixtures use seeds 0..N.
    pub fn from_seed(seed: u64) -> KeyPair {
        let mut material = [0u8; 40];
        material[..32].copy_from_slice(b"aigc-chain/keypair-seed/v1......");
        material[32..].copy_from_slice(&seed.to_le_bytes());
        KeyPair::from_secret(sha256(&material).0)
    }

    pub fn public_key(&self) -> PublicKey {
        self.public
    }

    pub fn address(&self) -> Address {
        self.address
    }

    pub fn sign(&self, message: &[u8]) -> SignatureBytes {
        SignatureBytes(self.signing.sign(message).to_bytes())
    }
}

/// Verifies `signature` over `message` under `public_key`.
pub fn verify_signature(public_key: &PublicKey, message: &[u8], signature: &SignatureBytes) -> bool {
    let Ok(vk) = ed25519_dalek::VerifyingKey::from_bytes(&public_key.0) else {
        return false;
    };
    vk.verify(message, &ed25519_dalek::Signature::from_bytes(&signature.0))
        .is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn address_derivation_is_stable() {
        let kp = KeyPair::from_seed(0);
        assert_eq!(kp.address(), Address::from_public_key(&kp.public_key()));
        assert_eq!(KeyPair::from_seed(0).address(), kp.address());
        assert_ne!(KeyPair::from_seed(1).address(), kp.address());
    }

    #[test]
    fn sha256_empty_input_matches_known_value() {
        assert_eq!(
            sha256(b"").to_hex(),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn signature_roundtrip_and_tamper() {
        let kp = KeyPair::from_seed(3);
        let sig = kp.sign(b"payload");
        assert!(verify_signature(&kp.public_key(), b"payload", &sig));
        assert!(!verify_signature(&kp.public_key(), b"payloae", &sig));
    }

    #[test]
    fn system_address_is_zero() {
        assert!(SYSTEM.is_system());
        assert_eq!(SYSTEM.to_hex(), "0".repeat(64));
    }
}
