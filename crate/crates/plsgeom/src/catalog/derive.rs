pub fn regen_all() {}
