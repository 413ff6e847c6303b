#ifndef SPINRWA_SPINRWA_HPP
#define SPINRWA_SPINRWA_HPP

// Convenience header pulling in the whole library.

#include "spinrwa/csv.hpp"
#include "spinrwa/dynamics.hpp"
#include "spinrwa/errors.hpp"
#include "spinrwa/field.hpp"
#include "spinrwa/oracle.hpp"
#include "spinrwa/scenario.hpp"
#include "spinrwa/spin.hpp"
#include "spinrwa/svg.hpp"
#include "spinrwa/sweep.hpp"
#include "spinrwa/wigner.hpp"

#endif // SPINRWA_SPINRWA_HPP
