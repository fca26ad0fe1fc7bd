#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrto/errors.hpp"

namespace rrto {

// The nine runtime calls the offloading layer intercepts. Nothing else is
// representable on the wire or in traces.
enum class ApiKind : uint8_t {
  GetDevice = 0,
  GetLastError = 1,
  LaunchKernel = 2,
  Malloc = 3,
  StreamIsCapturing = 4,
  StreamSynchronize = 5,
  MemcpyHtoD = 6,
  MemcpyDtoH = 7,
  MemcpyDtoD = 8,
};
inline constexpr int kApiKindCount = 9;

const char* to_string(ApiKind kind);
std::optional<ApiKind> api_kind_from_string(const std::string& name);

struct MemRegion {
  uint64_t base = 0;
  uint64_t size = 0;
  bool operator==(const MemRegion&) const = default;
};

// Host-side data attached to a call or a return. `size` is the logical byte
// count; `bytes` may be empty when the payload is size-only (the host buffer
// of a DtoH request) or when a trace file kept only a digest of it.
struct Payload {
  uint64_t size = 0;
  std::vector<uint8_t> bytes;
  std::optional<std::array<uint8_t, 32>> digest;

  bool operator==(const Payload&) const = default;
  bool empty() const { return size == 0; }
  bool has_bytes() const { return bytes.size() == size; }

  static Payload of(std::vector<uint8_t> data) {
    Payload p;
    p.size = data.size();
    p.bytes = std::move(data);
    return p;
  }
  static Payload size_only(uint64_t n) {
    Payload p;
    p.size = n;
    return p;
  }
};

struct ArgList {
  std::vector<int64_t> scalars;
  std::vector<MemRegion> in_regions;   // read by the call
  std::vector<MemRegion> out_regions;  // written by the call
  Payload payload;                     // nonzero only for HtoD/DtoH

  bool operator==(const ArgList&) const = default;
};

enum class Status : int32_t {
  Success = 0,
  UnknownKernel = 1,
  UnallocatedRegion = 2,
  RegionSizeMismatch = 3,
  InvalidArgument = 4,
  Aborted = 5,
};

const char* to_string(Status s);

struct ReturnValue {
  Status status = Status::Success;
  Payload payload;  // present only for DtoH data and Malloc's address

  bool operator==(const ReturnValue&) const = default;
  bool ok() const { return status == Status::Success; }

  static ReturnValue success() { return {}; }
  static ReturnValue error(Status s) { return {s, {}}; }
  static ReturnValue with_payload(std::vector<uint8_t> data) {
    return {Status::Success, Payload::of(std::move(data))};
  }
};

// A call before execution: everything but the return value.
struct CallRequest {
  ApiKind func;
  std::string kernel;  // nonempty iff func == LaunchKernel
  ArgList args;
};

struct KernelIo {
  const std::vector<std::vector<uint8_t>>& inputs;
  const std::vector<int64_t>& scalars;
  std::vector<std::vector<uint8_t>>& outputs;  // pre-sized to out_regions
};
using KernelFn = std::function<void(const KernelIo&)>;

// Maps an unregistered kernel id to a function, or declines. Lets both ends
// of a connection materialize the same kernel family without shipping config.
using KernelResolver = std::function<std::optional<KernelFn>(const std::string& id)>;

// Keyed byte mixer: output bytes are an avalanche of (key, all input bytes,
// scalars, position). Any dropped, reordered, or misaddressed operator changes
// every downstream byte.
KernelFn make_mix_kernel(uint64_t key);
KernelFn make_identity_kernel();

// Resolver deriving a mixer key from the kernel id itself.
KernelResolver mix_kernel_resolver();

// Deterministic bump allocation shared by the device and the workload
// planner, so recorded addresses repeat across runs.
std::pair<uint64_t, uint64_t> bump_alloc(uint64_t next_base, uint64_t size);
inline constexpr uint64_t kAllocBase = 0x10000;

// Simulated single-GPU device: a byte-addressed memory map plus a kernel
// registry. Replaying the same call sequence from a fresh state yields
// bit-identical memory and return values.
class DeviceState {
 public:
  void register_kernel(const std::string& id, KernelFn fn);
  void set_kernel_resolver(KernelResolver resolver) {
    resolver_ = std::move(resolver);
  }
  bool has_kernel(const std::string& id) const {
    return kernels_.count(id) != 0;
  }

  ReturnValue execute(const CallRequest& call);

  const std::map<uint64_t, std::vector<uint8_t>>& memory() const {
    return allocs_;
  }
  uint64_t next_alloc_base() const { return next_base_; }

 private:
  ReturnValue fail(Status s) {
    last_error_ = s;
    return ReturnValue::error(s);
  }
  // Pointer into the allocation covering `r`, or nullptr.
  uint8_t* locate(const MemRegion& r);

  std::map<uint64_t, std::vector<uint8_t>> allocs_;
  uint64_t next_base_ = kAllocBase;
  Status last_error_ = Status::Success;
  std::map<std::string, KernelFn> kernels_;
  KernelResolver resolver_;
};

}  // namespace rrto
