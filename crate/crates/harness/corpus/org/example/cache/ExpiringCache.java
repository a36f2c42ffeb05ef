package org.example.cache;

public class ExpiringCache {
    public void purgeExpired(long now) {
        Iterator<Map.Entry<String, Long>> it = this.stamps.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> entry = it.next();
            if (now - entry.getValue() > this.timeout) {
                it.remove();
                this.size--;
            }
        }
    }

    public void evictStale(long time) {
        Iterator<Map.Entry<String, Long>> iter = this.lastAccess.entrySet().iterator();
        while (iter.hasNext()) {
            Map.Entry<String, Long> e = iter.next();
            if (time - e.getValue() > this.maxIdle) {
                iter.remove();
                this.count--;
            }
        }
    }

    public void dropOld(long clock) {
        Iterator<Map.Entry<String, Long>> cursor = this.created.entrySet().iterator();
        while (cursor.hasNext()) {
            Map.Entry<String, Long> item = cursor.next();
            if (clock - item.getValue() > this.ttl) {
                cursor.remove();
                this.live--;
            }
        }
    }

    public void expireSessions(long now) {
        Iterator<Map.Entry<String, Long>> it = this.sessions.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> session = it.next();
            if (now - session.getValue() > this.sessionTimeout) {
                it.remove();
                this.active--;
            }
        }
    }

    public void sweepTokens(long instant) {
        Iterator<Map.Entry<String, Long>> entries = this.tokens.entrySet().iterator();
        while (entries.hasNext()) {
            Map.Entry<String, Long> token = entries.next();
            if (instant - token.getValue() > this.tokenLifetime) {
                entries.remove();
                this.issued--;
            }
        }
    }

    public void expireLeases(long now) {
        Iterator<Map.Entry<String, Long>> it = this.leases.entrySet().iterator();
        while (it.hasNext()) {
            if (now - it.next().getValue() > this.leaseTime) {
                it.remove();
                this.leased--;
            }
        }
    }
}
