package org.example.cache;

public class LazySweeper {
    public void sweepStamps(long now) {
        Iterator<Map.Entry<String, Long>> it = this.stamps.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }

    public void sweepAccess(long now) {
        Iterator<Map.Entry<String, Long>> it = this.lastAccess.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }

    public void sweepCreated(long now) {
        Iterator<Map.Entry<String, Long>> it = this.created.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }

    public void sweepSessions(long now) {
        Iterator<Map.Entry<String, Long>> it = this.sessions.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }

    public void sweepTokens(long now) {
        Iterator<Map.Entry<String, Long>> it = this.tokens.entrySet().iterator();
        while (it.hasNext()) {
            Map.Entry<String, Long> e = it.next();
            if (now - e.getValue() > this.timeout) {
                this.size--;
            }
        }
        this.dirty = true;
    }
}
