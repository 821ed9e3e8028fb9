#include "lsw/ring.hpp"

namespace lsw {

RingContext::RingContext(Field field, std::vector<Variable> vars)
    : field_(field), vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i].name, i).second)
            throw RingError("duplicate variable name '" + vars_[i].name + "'");
        if (vars_[i].row_tag < 0) throw RingError("negative row tag");
        zm_rank_ = std::max(zm_rank_, vars_[i].row_tag);
    }
}

Ring RingContext::make(Field field, std::vector<Variable> vars) {
    return std::make_shared<const RingContext>(std::move(field), std::move(vars));
}

std::optional<size_t> RingContext::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RingContext::structurally_equal(const RingContext& o) const {
    if (!field_.same(o.field_) || vars_.size() != o.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != o.vars_[i].name || vars_[i].row_tag != o.vars_[i].row_tag)
            return false;
    return true;
}

std::vector<int64_t> RingContext::monomial_multidegree(const Monomial& m) const {
    std::vector<int64_t> deg(static_cast<size_t>(zm_rank_), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m.e[i] == 0) continue;
        int tag = vars_[i].row_tag;
        if (tag == 0)
            throw RingError("variable '" + vars_[i].name + "' carries no row tag");
        deg[static_cast<size_t>(tag - 1)] += m.e[i];
    }
    return deg;
}

std::string format_var_name(const std::string& base, const std::vector<int32_t>& indices) {
    std::string s = base + "[";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
    }
    return s + "]";
}

Ring make_t_ring(const Field& f, int m, int n,
                 const std::vector<std::vector<int32_t>>* labels) {
    std::vector<Variable> vars;
    vars.reserve(static_cast<size_t>(m) * n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            int32_t label = labels ? (*labels)[i - 1][j - 1] : j;
            vars.push_back({format_var_name("t", {i, label}), i});
        }
    return RingContext::make(f, std::move(vars));
}

Ring make_x_ring(const Field& f, int n) {
    std::vector<Variable> vars;
    for (int j = 1; j <= n; ++j) vars.push_back({format_var_name("x", {j}), 0});
    return RingContext::make(f, std::move(vars));
}

Ring make_s_ring(const Field& f, const std::vector<std::vector<int32_t>>& tuples) {
    std::vector<Variable> vars;
    vars.reserve(tuples.size());
    for (const auto& t : tuples) vars.push_back({format_var_name("s", t), 0});
    return RingContext::make(f, std::move(vars));
}

Ring extend_ring(const Ring& r, const std::vector<Variable>& extra) {
    std::vector<Variable> vars = r->vars();
    vars.insert(vars.end(), extra.begin(), extra.end());
    return RingContext::make(r->field(), std::move(vars));
}

Ring subring(const Ring& r, const std::vector<size_t>& keep) {
    std::vector<Variable> vars;
    vars.reserve(keep.size());
    for (size_t i : keep) vars.push_back(r->var(i));
    return RingContext::make(r->field(), std::move(vars));
}

} // namespace lsw
