#include "liegeo/params.hpp"

#include <mutex>
#include <unordered_map>

namespace liegeo::params {

namespace {
struct Registry {
	std::mutex mutex;
	std::vector<std::string> names;
	std::unordered_map<std::string, int> ids;
};
Registry& registry() {
	static Registry r;
	return r;
}
} // namespace

int id(const std::string& name) {
	auto& r = registry();
	std::lock_guard lock(r.mutex);
	auto it = r.ids.find(name);
	if (it != r.ids.end()) return it->second;
	int fresh = static_cast<int>(r.names.size());
	r.names.push_back(name);
	r.ids.emplace(name, fresh);
	return fresh;
}

const std::string& name(int i) {
	auto& r = registry();
	std::lock_guard lock(r.mutex);
	return r.names.at(static_cast<std::size_t>(i));
}

bool known(const std::string& n) {
	auto& r = registry();
	std::lock_guard lock(r.mutex);
	return r.ids.count(n) > 0;
}

} // namespace liegeo::params
