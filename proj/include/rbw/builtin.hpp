#pragma once

#include "rbw/io.hpp"

namespace rbw::builtin {

/// {e} with its trivial irrep.
io::GroupDocument trivial_group();
/// {e, r} with irreps "trivial" and "sign".
io::GroupDocument z2_group();
/// Permutations of three symbols, labelled in one-line notation ("123" is the
/// identity), composed as (gh)(x) = g(h(x)). Irreps "trivial", "sign" and the
/// two-dimensional "standard".
io::GroupDocument s3_group();

}  // namespace rbw::builtin
