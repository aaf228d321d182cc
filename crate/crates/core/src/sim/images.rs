//! Synthetic product images.
//!
//! Generated products are smooth low-frequency random fields: a coarse
//! random grid upsampled with the same bilinear kernel the hashes use.
//! Plagiarized copies add clamped per-pixel Gaussian noise, mirroring an
//! attacker lightly revising a stolen image.

use crate::rng::gaussian;
use crate::similarity::GrayImage;
use rand::Rng;

/// Default product image edge length.
pub const IMAGE_DIM: usize = 64;

const COARSE_DIM: usize = 6;

/// What kind of image to generate.
pub enum ImageKind<'a> {
    /// Fresh smooth random field.
    Base,
    /// `source` plus clamped Gaussian noise with standard deviation `sigma`
    /// gray levels.
    Noised { source: &'a GrayImage, sigma: f64 },
    /// Fresh field; callers draw it from a fresh stream to make it
    /// unrelated to any base image.
    Independent,
}

pub fn generate_image(rng: &mut impl Rng, kind: ImageKind<'_>) -> GrayImage {
    match kind {
        ImageKind::Base | ImageKind::Independent => base_image(rng),
        ImageKind::Noised { source, sigma } => noised_image(rng, source, sigma),
    }
}

/// Smooth random field: COARSE_DIM^2 uniform bytes, bilinearly upsampled.
pub fn base_image(rng: &mut impl Rng) -> GrayImage {
    let coarse: Vec<u8> = (0..COARSE_DIM * COARSE_DIM).map(|_| rng.gen::<u8>()).collect();
    GrayImage::new(COARSE_DIM, COARSE_DIM, coarse)
        .expect("coarse grid dims")
        .resize(IMAGE_DIM, IMAGE_DIM)
}

/// Adds clamped Gaussian noise of standard deviation `sigma` gray levels.
/// `sigma = 0` returns the source unchanged.
pub fn noised_image(rng: &mut impl Rng, source: &GrayImage, sigma: f64) -> GrayImage {
    assert!(sigma >= 0.0, "sigma must be nonnegative");
    let pixels = source
        .pixels()
        .iter()
        .map(|&p| {
            let v = p as f64 + sigma * gaussian(rng);
            (v + 0.5).floor().clamp(0.0, 255.0) as u8
        })
        .collect();
    GrayImage::new(source.width(), source.height(), pixels).expect("same dims as source")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_rng;

    #[test]
    fn zero_sigma_is_identity() {
        let mut rng = derive_rng(0, "img", 0);
        let img = base_image(&mut rng);
        let same = noised_image(&mut rng, &img, 0.0);
        assert_eq!(img, same);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = base_image(&mut derive_rng(42, "img", 3));
        let b = base_image(&mut derive_rng(42, "img", 3));
        assert_eq!(a, b);
    }
}
