#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nipreg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group over element indices 0..n-1, identity fixed at index 0.
/// Immutable after construction; safe to share between workers.
///
/// Groups of order <= 4096 carry a dense multiplication table; larger
/// cyclic/dihedral/product groups use closed-form multiplication.
class FiniteGroup {
public:
    enum class Kind { cyclic, dihedral, table, product };

    int order() const { return n_; }

    int mul(int x, int y) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(x) * n_ + y];
        return mul_slow(x, y);
    }

    int inv(int x) const { return inv_[x]; }

    bool abelian() const { return abelian_; }

    /// Cyclic factor orders [m_1..m_k]; present iff the group was built as
    /// a product of cyclic groups. Index bijection is mixed-radix with the
    /// first factor varying fastest.
    const std::optional<std::vector<int>>& abelian_decomposition() const {
        return decomposition_;
    }

    const std::string& spec() const { return spec_; }
    const std::vector<std::string>& labels() const { return labels_; }

    static GroupPtr cyclic(int n);
    static GroupPtr dihedral(int n);             // order 2n
    static GroupPtr symmetric(int k);            // k <= 6
    static GroupPtr quaternion8();
    static GroupPtr from_table(std::vector<std::vector<int>> rows, const std::string& spec);
    static GroupPtr product(const std::vector<GroupPtr>& factors, const std::string& spec);

private:
    FiniteGroup() = default;
    int mul_slow(int x, int y) const;
    void finish(const std::string& spec);  // inv table, flags, axiom checks

    int n_ = 1;
    Kind kind_ = Kind::cyclic;
    std::vector<std::uint16_t> table_;      // row-major, empty if closed-form
    std::vector<std::uint16_t> inv_;
    std::vector<GroupPtr> factors_;         // product kind
    std::optional<std::vector<int>> decomposition_;
    bool abelian_ = true;
    std::string spec_;
    std::vector<std::string> labels_;
};

/// Builds a group from a spec string:
///   Z<n>         cyclic
///   Z<n>^<k>     k-fold product
///   a x b        direct product of factor specs, e.g. Z4xZ2^2
///   D<n>         dihedral of order 2n
///   S<n>         symmetric, n <= 6
///   Q8           quaternion
///   table:<path> JSON file {order, mul:[[...]]}
/// Results are cached per spec string, so equal specs share one instance.
GroupPtr build_group(const std::string& spec, int order_cap = 20000);

/// Built-in catalog used by the verification suites: every construction
/// the grammar can express up to the given order, one spec per group.
std::vector<std::string> catalog_specs(int max_order);

}  // namespace nipreg
