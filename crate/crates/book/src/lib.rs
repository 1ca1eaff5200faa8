// mdbook can't run snippets that depend on a workspace crate, so each
// chapter is pulled in as the docs of an empty module and `cargo test --doc`
// runs its code blocks instead.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/constant-term.md")]
pub mod constant_term {}
#[doc = include_str!("../../../book/src/motzkin-triangle.md")]
pub mod motzkin_triangle {}
#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}
#[doc = include_str!("../../../book/src/general-triangles.md")]
pub mod general_triangles {}
#[doc = include_str!("../../../book/src/core-partitions.md")]
pub mod core_partitions {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
