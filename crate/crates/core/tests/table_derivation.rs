use logsine::reduce::{derive, shipped_families, DeriveConfig, ReductionTable, DEFAULT_TABLE};

#[test]
fn shipped_table_is_reproducible() {
    let shipped = ReductionTable::parse(DEFAULT_TABLE).unwrap();
    let mut count = 0;
    for (family, work_digits) in shipped_families() {
        let d = derive(&family, DeriveConfig { work_digits, verify_digits: 60 }).unwrap();
        assert!(d.new_heads.is_empty(), "{}: {:?}", family.name, d.new_heads);
        for r in d.rules {
            assert_eq!(shipped.get(&r.lhs), Some(&r));
            count += 1;
        }
    }
    assert_eq!(count, shipped.len());
}
