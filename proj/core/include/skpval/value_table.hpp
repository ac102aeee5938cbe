#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skpval/group_value.hpp"

namespace skpval {

/* Position (i, j) of a value: row i, 1-based position j inside the row. */
struct table_index {
    int i = 0;
    int j = 1;

    auto operator<=>(const table_index &) const = default;
    std::string str() const { return std::to_string(i) + "," + std::to_string(j); }
    static table_index parse(const std::string &s);
};

class value_table {
  public:
    struct entry {
        table_index idx;
        gvalue beta;
        index_or_inf n;
        std::vector<mpz_class> rel; // over all earlier entries, by flat position
        std::optional<unsigned> limit_label;
    };

    value_table() = default;

    /* Annotates every entry with n, its canonical relation and S/S^c. */
    static value_table compute_relations(std::size_t dim, std::vector<std::vector<gvalue>> rows,
                                         std::map<table_index, unsigned> limit_labels = {});

    std::size_t dim() const { return dim_; }
    std::size_t num_rows() const { return rows_.size(); }
    std::size_t row_len(std::size_t i) const { return i < rows_.size() ? rows_[i].size() : 0; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<std::vector<gvalue>> &rows() const { return rows_; }
    const std::map<table_index, unsigned> &limit_labels() const { return labels_; }

    bool has(table_index t) const;
    std::size_t flat(table_index t) const;
    const entry &at(std::size_t k) const { return entries_[k]; }
    const entry &at(table_index t) const { return entries_[flat(t)]; }
    const std::vector<entry> &entries() const { return entries_; }

    bool is_row_final(std::size_t k) const;
    std::vector<table_index> S(std::size_t k) const;
    std::vector<table_index> Sc(std::size_t k) const;
    std::vector<gvalue> betas() const;
    /* Rows that hold at least one value. */
    std::vector<std::size_t> nonempty_rows() const;

  private:
    std::size_t dim_ = 0;
    std::vector<std::vector<gvalue>> rows_;
    std::map<table_index, unsigned> labels_;
    std::vector<entry> entries_;
    std::vector<std::size_t> row_start_;
};

struct validation_report {
    struct check {
        table_index at;
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<check> checks;
    std::vector<table_index> truncated_limits;

    bool ok() const;
    std::vector<check> failures() const;
    bool failed(const std::string &name, table_index at) const;
};

validation_report validate_table(const value_table &t);

struct semigroup_element {
    gvalue value;
    std::vector<unsigned> witness; // coefficients over the generators
};

/* All sums of generators with total coefficient at most bound, sorted. */
std::vector<semigroup_element> enumerate_semigroup_witnessed(const std::vector<gvalue> &gens,
                                                             unsigned bound, std::size_t dim = 0);
std::vector<gvalue> enumerate_semigroup(const std::vector<gvalue> &gens, unsigned bound,
                                        std::size_t dim = 0);
std::vector<gvalue> enumerate_semigroup(const value_table &t, unsigned bound);

} // namespace skpval
