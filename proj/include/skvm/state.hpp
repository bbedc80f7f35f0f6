// skvm: a skill-composing virtual machine
// Copyright 2026 The skvm Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skvm/error.hpp"

namespace skvm {

/// Every machine word is a 64-bit real. Words playing an address, opcode,
/// counter or flag role must additionally be exact non-negative integers.
using Word = double;
using WordVector = Eigen::VectorXd;

inline constexpr double kIntegerEps = 1e-9;
inline constexpr Word kUnbound = -1.0;

/// Fixed slot budget per skill block; n_inputs + n_outputs must fit.
inline constexpr std::int64_t kMaxSlots = 8;
/// Words per skill block: entry, code_len, n_inputs, n_outputs, has_weights,
/// weight_descriptor, m_s, then kMaxSlots slot words.
inline constexpr std::int64_t kSkillBlockWords = 7 + kMaxSlots;
/// Default cap on total state length, see init_state.
inline constexpr std::int64_t kMaxTotalWords = std::int64_t{1} << 20;

inline bool is_exact_integer(Word v) {
  return std::abs(v - std::round(v)) <= kIntegerEps;
}

/// Checked conversion of a word used in an index-like role.
std::int64_t word_to_index(Word v, const char* role);

/// Canonical text form: integers without a decimal point, everything else
/// with enough digits to round-trip.
std::string format_word(Word v);

struct RegionLayout {
  std::int64_t register_count = 8;       // general-purpose registers R0..
  std::int64_t stack_capacity = 64;      // call-stack words
  std::int64_t descriptor_capacity = 64; // data descriptors
  std::int64_t skill_block_capacity = 32;
  std::int64_t code_capacity = 8192;     // words, 4 per instruction
  std::int64_t static_memory_capacity = 4096;

  // Region order is fixed: registers, stack, descriptor table, skill block
  // table, code, static memory. The register region holds R_L, R_SP, R_HALT
  // followed by the general-purpose words.
  std::int64_t register_words() const { return 3 + register_count; }
  std::int64_t stack_words() const { return stack_capacity; }
  std::int64_t descriptor_words() const { return 1 + 2 * descriptor_capacity; }
  std::int64_t skill_words() const {
    return 1 + kSkillBlockWords * skill_block_capacity;
  }
  std::int64_t code_words() const { return code_capacity; }
  std::int64_t memory_words() const { return static_memory_capacity; }

  std::int64_t register_begin() const { return 0; }
  std::int64_t stack_begin() const { return register_words(); }
  std::int64_t descriptor_begin() const { return stack_begin() + stack_words(); }
  std::int64_t skill_begin() const {
    return descriptor_begin() + descriptor_words();
  }
  std::int64_t code_begin() const { return skill_begin() + skill_words(); }
  std::int64_t memory_begin() const { return code_begin() + code_words(); }
  std::int64_t total_words() const { return memory_begin() + memory_words(); }

  std::int64_t max_instructions() const { return code_capacity / 4; }

  void validate() const;
  bool operator==(const RegionLayout&) const = default;
};

// Special register offsets within the register region.
inline constexpr std::int64_t kRegLine = 0;   // R_L, instruction index
inline constexpr std::int64_t kRegStack = 1;  // R_SP, stack-top index
inline constexpr std::int64_t kRegHalt = 2;   // R_HALT, 0 or 1

struct DataDescriptor {
  std::int64_t address = 0;  // static-memory index
  std::int64_t length = 0;   // word count
};

struct SkillBlockHeader {
  std::int64_t entry = 0;     // instruction index, set by registration
  std::int64_t code_len = 0;  // code words, set by registration
  std::int64_t n_inputs = 0;
  std::int64_t n_outputs = 0;
  bool has_weights = false;
  std::int64_t weight_descriptor = -1;  // descriptor index or -1
  std::int64_t m_s = 1;                 // 1 = compute outputs, 0 = jacobian
  std::vector<std::int64_t> slots;      // descriptor index or -1 per slot
};

struct WordDiff {
  std::int64_t index;
  Word before;
  Word after;
  bool operator==(const WordDiff&) const = default;
};

/// The machine state: one flat word vector plus its immutable layout. Plain
/// value semantics; a copy is a fully independent, bitwise-identical clone.
struct State {
  RegionLayout layout;
  WordVector words;

  Word reg(std::int64_t r) const { return words[layout.register_begin() + r]; }
  void set_reg(std::int64_t r, Word v) {
    words[layout.register_begin() + r] = v;
  }
  Word mem(std::int64_t a) const { return words[layout.memory_begin() + a]; }
  void set_mem(std::int64_t a, Word v) { words[layout.memory_begin() + a] = v; }
};

State init_state(const RegionLayout& layout,
                 std::int64_t max_total_words = kMaxTotalWords);

/// Appends `values` to static memory and records a descriptor for them.
/// Returns the new descriptor's index.
std::int64_t write_data(State& state, std::span<const Word> values);

std::vector<Word> read_region(const State& state, std::int64_t descriptor);

std::int64_t descriptor_count(const State& state);
DataDescriptor descriptor_at(const State& state, std::int64_t index);

/// Usable static-memory words still free for write_data. The top
/// abi::kReservedTailWords of static memory are reserved for the calling
/// convention and never allocated.
std::int64_t memory_free(const State& state);

/// Copies `code` into the next free code words and fills a skill block.
/// header.entry and header.code_len are computed here, not taken from the
/// caller. Returns the skill index.
std::int64_t register_skill_block(State& state, const SkillBlockHeader& header,
                                  std::span<const Word> code);

std::int64_t skill_count(const State& state);
SkillBlockHeader skill_header_at(const State& state, std::int64_t index);

/// Total code words consumed by registered skills.
std::int64_t code_words_used(const State& state);

std::vector<WordDiff> diff_states(const State& a, const State& b);

/// Integer-exactness and range audit of every address-role word (registers,
/// descriptor table, skill blocks). Throws Error on the first violation.
void validate_state(const State& state);

}  // namespace skvm
