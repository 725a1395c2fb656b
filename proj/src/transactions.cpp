#include "rulemine/transactions.hpp"

#include <algorithm>
#include <bit>

#include "rulemine/error.hpp"

namespace rulemine {

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& token_lists) {
    Vocabulary vocab;
    for (const auto& list : token_lists) {
        for (const auto& token : list) {
            vocab.id_to_token_.push_back(token);
        }
    }
    std::sort(vocab.id_to_token_.begin(), vocab.id_to_token_.end());
    vocab.id_to_token_.erase(
        std::unique(vocab.id_to_token_.begin(), vocab.id_to_token_.end()),
        vocab.id_to_token_.end());

    vocab.token_to_id_.reserve(vocab.id_to_token_.size());
    for (std::size_t i = 0; i < vocab.id_to_token_.size(); ++i) {
        vocab.token_to_id_.emplace(vocab.id_to_token_[i], static_cast<ItemId>(i));
    }
    return vocab;
}

std::optional<ItemId> Vocabulary::id_of(const std::string& token) const {
    auto it = token_to_id_.find(token);
    if (it == token_to_id_.end()) return std::nullopt;
    return it->second;
}

const std::string& Vocabulary::token(ItemId id) const {
    if (id >= id_to_token_.size()) {
        throw internal_error("vocabulary: item id " + std::to_string(id) + " out of range");
    }
    return id_to_token_[id];
}

TransactionSet TransactionSet::encode(const std::vector<std::vector<std::string>>& token_lists,
                                      const Vocabulary& vocab) {
    TransactionSet tset;
    tset.n_ = token_lists.size();
    tset.v_ = vocab.size();
    tset.words_ = (tset.n_ + 63) / 64;
    tset.rows_.resize(tset.n_);
    tset.column_bits_.assign(tset.v_ * tset.words_, 0);

    for (std::size_t row = 0; row < token_lists.size(); ++row) {
        auto& items = tset.rows_[row].items;
        items.reserve(token_lists[row].size());
        for (const auto& token : token_lists[row]) {
            auto id = vocab.id_of(token);
            if (!id) {
                throw validation_error("encode: token '" + token + "' in row " +
                                       std::to_string(row) + " is not in the vocabulary");
            }
            items.push_back(*id);
        }
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        for (ItemId id : items) {
            tset.column_bits_[id * tset.words_ + row / 64] |= 1ull << (row % 64);
        }
    }
    return tset;
}

std::span<const std::uint64_t> TransactionSet::column(ItemId item) const {
    if (item >= v_) {
        throw validation_error("support_count: item id " + std::to_string(item) +
                               " out of range (vocabulary size " + std::to_string(v_) + ")");
    }
    return {column_bits_.data() + item * words_, words_};
}

std::uint64_t TransactionSet::support_count(std::span<const ItemId> itemset) const {
    if (itemset.empty()) return n_;
    for (ItemId id : itemset) {
        if (id >= v_) {
            throw validation_error("support_count: item id " + std::to_string(id) +
                                   " out of range (vocabulary size " + std::to_string(v_) + ")");
        }
    }
    const std::uint64_t* first = column_bits_.data() + itemset[0] * words_;
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = first[w];
        for (std::size_t k = 1; k < itemset.size() && bits; ++k) {
            bits &= column_bits_[itemset[k] * words_ + w];
        }
        count += static_cast<std::uint64_t>(std::popcount(bits));
    }
    return count;
}

bool TransactionSet::consistent() const {
    // Column -> row direction: every set bit corresponds to a row item.
    for (ItemId item = 0; item < v_; ++item) {
        auto col = column(item);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = col[w];
            while (bits) {
                std::size_t row = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (row >= n_) return false;
                if (!std::binary_search(rows_[row].items.begin(), rows_[row].items.end(), item)) {
                    return false;
                }
            }
        }
    }
    // Row -> column direction, plus the strictly-increasing row invariant.
    for (std::size_t row = 0; row < n_; ++row) {
        const auto& items = rows_[row].items;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k > 0 && items[k] <= items[k - 1]) return false;
            if (items[k] >= v_) return false;
            if (!(column_bits_[items[k] * words_ + row / 64] & (1ull << (row % 64)))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace rulemine
