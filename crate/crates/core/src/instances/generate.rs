use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::model::{Bay, Container, HeightLimit, Instance};
use crate::rng::SplitMix64;

/// Stack height limit of a generated class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeightPolicy {
    Unlimited,
    /// `H_max = H + 2`.
    PlusTwo,
}

impl HeightPolicy {
    pub fn limit(self, fill_height: usize) -> HeightLimit {
        match self {
            HeightPolicy::Unlimited => HeightLimit::Unlimited,
            HeightPolicy::PlusTwo => HeightLimit::Bounded(fill_height + 2),
        }
    }
}

impl fmt::Display for HeightPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HeightPolicy::Unlimited => "unlimited",
            HeightPolicy::PlusTwo => "H+2",
        })
    }
}

impl FromStr for HeightPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "unlimited" | "inf" | "none" => Ok(HeightPolicy::Unlimited),
            "h+2" | "plus2" | "plus-two" => Ok(HeightPolicy::PlusTwo),
            other => Err(format!("unknown height policy `{other}` (use `unlimited` or `H+2`)")),
        }
    }
}

/// One benchmark class: `count` bays of `width` stacks filled to `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorParams {
    pub height: usize,
    pub width: usize,
    pub policy: HeightPolicy,
    pub seed: u64,
    pub count: usize,
}

impl GeneratorParams {
    pub fn new(height: usize, width: usize, policy: HeightPolicy, seed: u64, count: usize) -> Self {
        assert!(height >= 1 && width >= 1, "H and W must be positive");
        Self {
            height,
            width,
            policy,
            seed,
            count,
        }
    }

    pub fn n_containers(&self) -> usize {
        self.height * self.width
    }
}

/// Instance number `index` of a class.
///
/// A uniform permutation of `1..=H*W` is drawn with a Fisher-Yates shuffle
/// from `SplitMix64::derive(seed, [H, W, index])` and laid out column-major:
/// the first `H` values fill stack 1 bottom to top, the next `H` stack 2, and
/// so on. The height policy only sets `H_max`, so both policies of a class
/// share the same bays.
pub fn generate(params: &GeneratorParams, index: usize) -> Instance {
    let h = params.height;
    let n = params.n_containers();
    let mut rng = SplitMix64::derive(params.seed, &[h as u64, params.width as u64, index as u64]);
    let mut perm: Vec<Container> = (1..=n as Container).collect();
    rng.shuffle(&mut perm);
    let stacks = perm.chunks(h).map(<[Container]>::to_vec).collect();
    Instance::new(params.policy.limit(h), Bay::new(stacks)).expect("generated bays are well-formed")
}

/// Instances `1..=count` of a class.
pub fn make_class(params: &GeneratorParams) -> Vec<Arc<Instance>> {
    (1..=params.count)
        .map(|i| Arc::new(generate(params, i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_shape() {
        let p = GeneratorParams::new(3, 3, HeightPolicy::Unlimited, 7, 1);
        let inst = generate(&p, 1);
        assert_eq!(inst.n_containers(), 9);
        assert!(inst.bay().stacks().iter().all(|s| s.len() == 3));
        let mut all: Vec<_> = inst.bay().stacks().concat();
        all.sort_unstable();
        assert_eq!(all, (1..=9).collect::<Vec<_>>());
        assert_eq!(inst.h_max(), HeightLimit::Unlimited);
    }

    #[test]
    fn plus_two_policy() {
        let p = GeneratorParams::new(10, 40, HeightPolicy::PlusTwo, 1, 1);
        let inst = generate(&p, 1);
        assert_eq!(inst.n_containers(), 400);
        assert_eq!(inst.h_max(), HeightLimit::Bounded(12));
    }

    #[test]
    fn classes() {
        let p = GeneratorParams::new(3, 4, HeightPolicy::Unlimited, 11, 40);
        let class = make_class(&p);
        assert_eq!(class.len(), 40);
        for (i, a) in class.iter().enumerate() {
            for b in &class[i + 1..] {
                assert_ne!(a.bay(), b.bay());
            }
        }
        assert!(make_class(&GeneratorParams { count: 0, ..p }).is_empty());

        let wide = GeneratorParams::new(10, 100, HeightPolicy::PlusTwo, 3, 2);
        assert!(make_class(&wide).iter().all(|i| i.n_containers() == 1000));
    }

    #[test]
    fn policies_share_bays() {
        let a = generate(&GeneratorParams::new(4, 5, HeightPolicy::Unlimited, 9, 1), 3);
        let b = generate(&GeneratorParams::new(4, 5, HeightPolicy::PlusTwo, 9, 1), 3);
        assert_eq!(a.bay(), b.bay());
        assert_ne!(a.h_max(), b.h_max());
    }

    #[test]
    fn policy_names_parse() {
        assert_eq!("H+2".parse::<HeightPolicy>(), Ok(HeightPolicy::PlusTwo));
        assert_eq!("unlimited".parse::<HeightPolicy>(), Ok(HeightPolicy::Unlimited));
        assert!("tall".parse::<HeightPolicy>().is_err());
    }
}
