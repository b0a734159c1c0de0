#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "triadic/neo_riemann.hpp"
#include "triadic/perm_group.hpp"

namespace triadic {

/// Componentwise action of all transpositions and inversions (generated by T_1, I_0).
PermGroup build_ti_group();

/// The group generated by P, L and R.
PermGroup build_plr_group();

/// The group generated by L and R alone.
PermGroup build_lr_group();

/// The twelve transpositions (generated by T_1).
PermGroup build_transposition_group();

/// The 288 uniform triadic transformations.
PermGroup build_U();

/// A quasi-uniform triadic transformation: roots of each parity class move
/// by their own affine map r -> sign * r + shift, and parity is kept or
/// exchanged according to sigma.
struct QuasiUtt
{
  Sign sigma = Sign::Plus;
  int major_sign = 1;
  int major_shift = 0;
  int minor_sign = 1;
  int minor_shift = 0;
};

ConsonantTriad quasi_utt_apply(QuasiUtt const &q, ConsonantTriad const &y);
Permutation triad_permutation(QuasiUtt const &q);

/// All 1152 quasi-uniform triadic transformations.
PermGroup build_Q();

/// Closure of U with the componentwise inversion I_0 alone (order 576).
PermGroup build_U_with_inversions();

struct NamedCheck
{
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Result of checking that the T/I and PLR groups are mutual centralizers.
///
/// Only verify_duality() can produce one.
class DualityReport
{
public:
  std::size_t ti_order() const noexcept { return ti_order_; }
  std::size_t plr_order() const noexcept { return plr_order_; }
  bool both_simply_transitive() const noexcept { return both_simply_transitive_; }

  /// T/I equals the centralizer of PLR in Sym(S).
  bool ti_centralizes_plr() const noexcept { return ti_centralizes_plr_; }
  /// PLR equals the centralizer of T/I in Sym(S).
  bool plr_centralizes_ti() const noexcept { return plr_centralizes_ti_; }

  bool all_pairs_commute() const noexcept { return all_pairs_commute_; }
  std::size_t pair_checks() const noexcept { return pair_checks_; }

  std::optional<DihedralWitness> const &ti_witness() const noexcept { return ti_witness_; }
  std::optional<DihedralWitness> const &plr_witness() const noexcept { return plr_witness_; }

  /// Permutations lying in both groups, named by their T/I element.
  std::vector<TIElement> const &intersection() const noexcept { return intersection_; }

  std::vector<NamedCheck> const &checks() const noexcept { return checks_; }
  bool all_passed() const;
  std::optional<NamedCheck> first_failure() const;

  std::string to_text() const;
  std::string to_json() const;

private:
  DualityReport() = default;
  friend DualityReport verify_duality();

  std::size_t ti_order_ = 0;
  std::size_t plr_order_ = 0;
  bool both_simply_transitive_ = false;
  bool ti_centralizes_plr_ = false;
  bool plr_centralizes_ti_ = false;
  bool all_pairs_commute_ = false;
  std::size_t pair_checks_ = 0;
  std::optional<DihedralWitness> ti_witness_;
  std::optional<DihedralWitness> plr_witness_;
  std::vector<TIElement> intersection_;
  std::vector<NamedCheck> checks_;
};

DualityReport verify_duality();

/// Uniform and quasi-uniform transformation checks.
class HookReport
{
public:
  std::size_t u_order() const noexcept { return u_order_; }
  std::size_t q_order() const noexcept { return q_order_; }
  std::size_t u_with_inversions_order() const noexcept { return u_with_inversions_order_; }

  std::vector<NamedCheck> const &checks() const noexcept { return checks_; }
  bool all_passed() const;
  std::optional<NamedCheck> first_failure() const;

  std::string to_text() const;
  std::string to_json() const;

private:
  HookReport() = default;
  friend HookReport verify_hook();

  std::size_t u_order_ = 0;
  std::size_t q_order_ = 0;
  std::size_t u_with_inversions_order_ = 0;
  std::vector<NamedCheck> checks_;
};

HookReport verify_hook();

/// The UTT acting as `p`, if any.
std::optional<Utt> utt_of(Permutation const &p);

} // namespace triadic
