#include "skpval/value_table.hpp"
#include "skpval/error.hpp"

#include <algorithm>

namespace skpval {

table_index table_index::parse(const std::string &s)
{
    auto comma = s.find(',');
    try {
        if (comma == std::string::npos)
            throw 0;
        std::size_t a = 0, b = 0;
        int i = std::stoi(s.substr(0, comma), &a);
        int j = std::stoi(s.substr(comma + 1), &b);
        if (a != comma || b != s.size() - comma - 1 || i < 0 || j < 1)
            throw 0;
        return {i, j};
    } catch (...) {
        throw error(errc::parse_error, "malformed table index '" + s + "'");
    }
}

value_table value_table::compute_relations(std::size_t dim, std::vector<std::vector<gvalue>> rows,
                                           std::map<table_index, unsigned> limit_labels)
{
    value_table t;
    t.dim_ = dim;
    t.rows_ = std::move(rows);
    t.labels_ = std::move(limit_labels);
    bool any = false;
    for (auto &r : t.rows_)
        any = any || !r.empty();
    if (!any)
        throw error(errc::bad_input, "value table has no entries");
    relation_builder rb(dim);
    for (std::size_t i = 0; i < t.rows_.size(); ++i) {
        t.row_start_.push_back(t.entries_.size());
        for (std::size_t j = 0; j < t.rows_[i].size(); ++j) {
            entry e;
            e.idx = {static_cast<int>(i), static_cast<int>(j + 1)};
            e.beta = t.rows_[i][j];
            auto &info = rb.push(e.beta);
            e.n = info.n;
            e.rel = info.rel.m;
            auto it = t.labels_.find(e.idx);
            if (it != t.labels_.end())
                e.limit_label = it->second;
            t.entries_.push_back(std::move(e));
        }
    }
    for (auto &[idx, lab] : t.labels_)
        if (!t.has(idx))
            throw error(errc::bad_input, "limit label on missing entry " + idx.str());
    return t;
}

bool value_table::has(table_index t) const
{
    return t.i >= 0 && static_cast<std::size_t>(t.i) < rows_.size() && t.j >= 1 &&
           static_cast<std::size_t>(t.j) <= rows_[t.i].size();
}

std::size_t value_table::flat(table_index t) const
{
    if (!has(t))
        throw error(errc::bad_input, "no entry " + t.str() + " in table");
    return row_start_[t.i] + (t.j - 1);
}

bool value_table::is_row_final(std::size_t k) const
{
    auto &e = entries_[k];
    return static_cast<std::size_t>(e.idx.j) == rows_[e.idx.i].size();
}

std::vector<table_index> value_table::S(std::size_t k) const
{
    std::vector<table_index> out;
    for (std::size_t l = 0; l < entries_[k].rel.size(); ++l)
        if (entries_[k].rel[l] > 0)
            out.push_back(entries_[l].idx);
    return out;
}

std::vector<table_index> value_table::Sc(std::size_t k) const
{
    std::vector<table_index> out;
    for (std::size_t l = 0; l < entries_[k].rel.size(); ++l)
        if (entries_[k].rel[l] < 0)
            out.push_back(entries_[l].idx);
    return out;
}

std::vector<gvalue> value_table::betas() const
{
    std::vector<gvalue> out;
    for (auto &e : entries_)
        out.push_back(e.beta);
    return out;
}

std::vector<std::size_t> value_table::nonempty_rows() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!rows_[i].empty())
            out.push_back(i);
    return out;
}

bool validation_report::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const check &c) { return c.pass; });
}

std::vector<validation_report::check> validation_report::failures() const
{
    std::vector<check> out;
    for (auto &c : checks)
        if (!c.pass)
            out.push_back(c);
    return out;
}

bool validation_report::failed(const std::string &name, table_index at) const
{
    for (auto &c : checks)
        if (!c.pass && c.name == name && c.at == at)
            return true;
    return false;
}

validation_report validate_table(const value_table &t)
{
    validation_report rep;
    gvalue zero(t.dim());
    for (std::size_t k = 0; k < t.size(); ++k) {
        auto &e = t.at(k);
        bool final = t.is_row_final(k);
        rep.checks.push_back({e.idx, "positive_value", e.beta > zero, "beta=" + e.beta.str()});
        if (!final) {
            bool fin = !e.n.is_inf();
            rep.checks.push_back({e.idx, "interior_finite", fin,
                                  fin ? "n=" + e.n.str() : "n=inf before the end of row"});
            if (fin) {
                auto &next = t.at(k + 1);
                gvalue bound = mpq_class(mpz_class(e.n.n)) * e.beta;
                bool inc = next.beta > bound;
                rep.checks.push_back({e.idx, "increasing", inc,
                                      next.beta.str() + (inc ? " > " : " <= ") + e.n.str() + "*" +
                                          e.beta.str()});
            }
        }
        if (e.limit_label) {
            bool mono = true;
            for (std::size_t l = k - (e.idx.j - 1); l < k; ++l)
                mono = mono && t.at(l).beta < e.beta;
            rep.checks.push_back({e.idx, "limit_monotone", mono,
                                  "limit label " + std::to_string(*e.limit_label) +
                                      ", checked against materialized predecessors only"});
            rep.truncated_limits.push_back(e.idx);
        }
        auto sc = t.Sc(k);
        std::string d;
        for (auto &x : sc)
            d += (d.empty() ? "negative coefficients at " : " ") + x.str();
        rep.checks.push_back({e.idx, "positive_type", sc.empty(), d});
    }
    return rep;
}

std::vector<semigroup_element> enumerate_semigroup_witnessed(const std::vector<gvalue> &gens,
                                                             unsigned bound, std::size_t dim)
{
    std::size_t r = dim ? dim : (gens.empty() ? 1 : gens[0].dim());
    std::map<gvalue, std::vector<unsigned>> seen;
    std::vector<gvalue> layer{gvalue(r)};
    seen.emplace(gvalue(r), std::vector<unsigned>(gens.size(), 0));
    for (unsigned s = 1; s <= bound; ++s) {
        std::vector<gvalue> next;
        for (auto &v : layer) {
            auto w = seen.at(v);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                gvalue x = v + gens[g];
                if (seen.count(x))
                    continue;
                auto wx = w;
                ++wx[g];
                seen.emplace(x, std::move(wx));
                next.push_back(std::move(x));
            }
        }
        layer = std::move(next);
    }
    std::vector<semigroup_element> out;
    for (auto &[v, w] : seen)
        out.push_back({v, w});
    return out;
}

std::vector<gvalue> enumerate_semigroup(const std::vector<gvalue> &gens, unsigned bound,
                                        std::size_t dim)
{
    std::vector<gvalue> out;
    for (auto &e : enumerate_semigroup_witnessed(gens, bound, dim))
        out.push_back(e.value);
    return out;
}

std::vector<gvalue> enumerate_semigroup(const value_table &t, unsigned bound)
{
    return enumerate_semigroup(t.betas(), bound, t.dim());
}

} // namespace skpval
