#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Binary transaction encoding. Each document becomes the set of distinct
// item ids for its tokens (presence only, no weights); the set is stored
// both row-major (for explanation output and the row-scan oracle) and as
// per-item column bit vectors (the support-counting substrate).
namespace rulemine {

using ItemId = std::uint32_t;

/// Bijection token <-> dense id. Ids follow ascending lexicographic token
/// order, so id-vector comparisons equal token-sequence comparisons and the
/// mapping is independent of document order.
class Vocabulary {
public:
    static Vocabulary build(const std::vector<std::vector<std::string>>& token_lists);

    std::optional<ItemId> id_of(const std::string& token) const;
    const std::string& token(ItemId id) const;
    std::size_t size() const { return id_to_token_.size(); }

private:
    std::vector<std::string> id_to_token_;
    std::unordered_map<std::string, ItemId> token_to_id_;
};

struct Transaction {
    std::vector<ItemId> items;  // strictly increasing
};

class TransactionSet {
public:
    /// Encodes one transaction per token list (empty lists included, so n
    /// always equals the document count). Throws if a token is not in vocab.
    static TransactionSet encode(const std::vector<std::vector<std::string>>& token_lists,
                                 const Vocabulary& vocab);

    std::size_t transaction_count() const { return n_; }
    std::size_t vocab_size() const { return v_; }
    std::size_t words_per_column() const { return words_; }

    const std::vector<Transaction>& rows() const { return rows_; }
    std::span<const std::uint64_t> column(ItemId item) const;

    /// Rows whose item set is a superset of `itemset` (sorted ids), counted
    /// by intersecting column bit vectors. The empty itemset counts all rows.
    std::uint64_t support_count(std::span<const ItemId> itemset) const;

    /// Cross-checks that rows and columns encode the same 0/1 matrix.
    bool consistent() const;

private:
    std::size_t n_ = 0;
    std::size_t v_ = 0;
    std::size_t words_ = 0;
    std::vector<Transaction> rows_;
    std::vector<std::uint64_t> column_bits_;  // v_ columns of words_ words each
};

}  // namespace rulemine
