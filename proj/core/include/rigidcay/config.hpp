#pragma once

namespace rigidcay {

// Element-count ceilings. The environment variable RIGIDCAY_CAPACITY, when
// set to a positive integer, overrides both caps; set_capacity_override
// (used by the CLI --capacity flag) takes precedence over the environment.

/// Cap on enumerated group orders / product sizes. Default 1'000'000.
long long element_capacity();

/// Cap applied by the family generators to SL and abelian instances.
/// Default 10'000.
long long family_capacity();

/// Largest group order for which a full multiplication table is built
/// lazily on first use. Default 10'000.
int multiplication_table_cap();

void set_capacity_override(long long value);
void clear_capacity_override();

}  // namespace rigidcay
