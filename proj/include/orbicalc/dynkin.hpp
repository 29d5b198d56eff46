#pragma once

#include <string>
#include <vector>

#include "orbicalc/matrix.hpp"

namespace orbicalc {

enum class AdeType { A, D, E };

struct AdeComponent {
  AdeType type;
  unsigned rank;
  bool operator==(const AdeComponent&) const = default;
};

/// Multiset of connected ADE Dynkin components: A_k (k >= 1), D_l (l >= 4),
/// E_6, E_7, E_8.
struct DynkinConfiguration {
  std::vector<AdeComponent> components;

  void add(AdeType type, unsigned rank);
  unsigned total_rank() const;
  std::string to_string() const;
};

/// Parses strings like "A19 + 2E8 + D4".
DynkinConfiguration parse_dynkin(const std::string& text);

/// eu = sum a_l (l+1) + sum d_m (m+2) + sum e_n (n+2).
Int eu(const DynkinConfiguration& config);

/// One reducible fiber: multiplicities of its components and whether each
/// component belongs to the chosen configuration Gamma.
struct FiberData {
  std::string name;
  struct Component {
    Int multiplicity;
    bool in_gamma;
  };
  std::vector<Component> components;
};

/// (Z1): at most one fiber has every multiplicity-1 component inside Gamma.
bool check_z1(const std::vector<FiberData>& fibers);

/// (Z2): eu <= 23.
bool check_z2(const DynkinConfiguration& config);

/// Sanity guard for K3 ambients: the configuration rank must fit beside the
/// hyperbolic part, total_rank <= ambient_rank - 2.
bool check_rank_bound(const DynkinConfiguration& config, unsigned ambient_rank);

}  // namespace orbicalc
