#ifndef LSW_RING_HPP
#define LSW_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lsw/field.hpp"
#include "lsw/monomial.hpp"

namespace lsw {

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A named variable. row_tag > 0 marks the Z^m-graded families (t_{ij} and
/// y_i carry tag i, so their multidegree is the i-th standard basis vector);
/// row_tag == 0 means untagged (x_j, s_alpha, auxiliary variables).
struct Variable {
    std::string name;
    int row_tag = 0;
};

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Ordered variable list plus the ground field. Immutable after creation;
/// polynomials hold a shared_ptr to their context.
class RingContext {
public:
    static Ring make(Field field, std::vector<Variable> vars);

    const Field& field() const { return field_; }
    size_t nvars() const { return vars_.size(); }
    const Variable& var(size_t i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }

    std::optional<size_t> var_index(const std::string& name) const;

    /// Rank of the Z^m grading (largest row tag; 0 if nothing is tagged).
    int zm_rank() const { return zm_rank_; }

    bool structurally_equal(const RingContext& o) const;

    /// Multidegree of a monomial; throws RingError if an untagged variable
    /// occurs with positive exponent.
    std::vector<int64_t> monomial_multidegree(const Monomial& m) const;

    RingContext(Field field, std::vector<Variable> vars);

private:
    Field field_;
    std::vector<Variable> vars_;
    std::map<std::string, size_t> index_;
    int zm_rank_ = 0;
};

inline bool same_ring(const Ring& a, const Ring& b) {
    return a.get() == b.get() || a->structurally_equal(*b);
}

/// "t[1,2]", "s[2,3,1]", ...
std::string format_var_name(const std::string& base, const std::vector<int32_t>& indices);

/// t-matrix ring: variables t[i, label] for i = 1..m in row-major order,
/// row-tagged by i. Labels default to 1..n per row.
Ring make_t_ring(const Field& f, int m, int n,
                 const std::vector<std::vector<int32_t>>* labels = nullptr);

/// x[1..n], untagged.
Ring make_x_ring(const Field& f, int n);

/// One s[tuple] variable per point, in the given order.
Ring make_s_ring(const Field& f, const std::vector<std::vector<int32_t>>& tuples);

/// New context with extra variables appended (indices of the old ones keep).
Ring extend_ring(const Ring& r, const std::vector<Variable>& extra);

/// New context keeping exactly the given variables, in their original order.
Ring subring(const Ring& r, const std::vector<size_t>& keep);

} // namespace lsw

#endif
