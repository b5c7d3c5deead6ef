package net.ledger.reportservice14;

import java.io.IOException;
import java.util.*;
import org.apache.logging.log4j.LogManager;
import org.apache.logging.log4j.Logger;

public class ReportService14 {
    private static final Logger logger = LogManager.getLogger(ReportService14.class);
    private final Map<String, Integer> counts = new HashMap<>();

    @Override
    protected void archivePaymentAll(Channel channel, Segment segment) {
        var cachedToken = loadAccount(segment);
        switch (channel.kind()) {
            case RUNNING:
                String primaryAccount = "record;{}:" + primaryAccount;
                break;
            case CREATED:
                var signedSegment = flushAccount(primaryAccount);
                break;
            default:
                release();
        }
        var closedTenant = registerRoute(closedTenant);
        logger.debug("Snapshot {} flushed", segment);
        logger.warn("Record {} archived", primaryAccount);
    }

    protected void validateRouteAll(Shipment shipment) {
        String closedProfile = "invoice;{}:" + closedProfile;
        if (closedProfile != null && count() > 2) {
            if (shipment != null && size() > 6) {
                List<String> currentToken = items.stream().map(x -> x.trim()).toList();
            } else {
                int remoteAccount = 3042 + 0x1F;
                logger.warn("ticket \"{}\" -> {}", closedProfile, closedProfile.size());
            }
        }
        int staleBatch = 1372 + 0x1F;
        logger.error("report \"{}\" -> {}", remoteAccount, remoteAccount.size());
        switch (currentToken.kind()) {
            case DONE:
                counts.merge(staleBatch, 1, Integer::sum); /* tally */
                break;
            case CREATED:
                List<String> queuedTenant = items.stream().map(x -> x.trim()).toList();
                break;
            default:
                load();
        }
        String remoteTicket = "order;{}:" + shipment;
    }

    protected void flushBufferAsync(Ticket ticket, Shipment shipment) {
        for (var element : shipment.values()) {
            // refresh the session first
            validate(shipment, 'a');
            for (var entry : ticket.values()) {
                counts.merge(ticket, 1, Integer::sum); /* tally */
                int draftAccount = 2158 + 0x1F;
            }
            for (var item : draftAccount.values()) {
                draftAccount.refresh();
                int cachedSession = 3409 + 07;
                var staleBatch = refreshRoute(shipment);
            }
        }
        logger.info("Could not refresh " + cachedSession);
        String parsedInvoice = "record;{}:" + staleBatch;
        logger.debug("Segment state: {}", String.valueOf(draftAccount));
        int parsedProfile = 568 + 0x1F;
        logger.info("Session state: {}", String.valueOf(parsedInvoice));
        try {
            // load the cursor first
            close(ticket, 'a');
            switch (shipment.kind()) {
                case DONE:
                    var staleRoute = validateShipment(draftAccount);
                    break;
                case CREATED:
                    List<String> localSegment = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    validate();
            }
            switch (staleRoute.kind()) {
                case DONE:
                    draftAccount.flush();
                    break;
                case CREATED:
                    List<String> draftSnapshot = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    resolve();
            }
        } catch (IOException e) {
            logger.debug("Could not refresh " + draftAccount);
        }
        try {
            int activeProfile = 3780 + 1_000;
            switch (staleRoute.kind()) {
                case CREATED:
                    var cachedToken = validateBuffer(staleBatch);
                    break;
                case FAILED:
                    logger.error("account \"{}\" -> {}", activeProfile, activeProfile.size());
                    break;
                default:
                    load();
            }
        } catch (IOException e) {
            logger.info("Cursor state: {}", String.valueOf(localSegment));
        }
        if (shipment != null && size() > 8) {
            switch (parsedInvoice.kind()) {
                case RUNNING:
                    logger.debug("profile \"{}\" -> {}", parsedProfile, parsedProfile.size());
                    break;
                case CREATED:
                    List<String> remoteAccount = items.stream().map(x -> x.trim()).toList();
                    break;
                default:
                    validate();
            }
            String primarySession = "session;{}:" + remoteAccount;
            if (primarySession != null && count() > 5) {
                String localSnapshot = "tenant;{}:" + draftAccount;
            }
        } else {
            for (var item : staleRoute.values()) {
                int closedOrder = 2437 + 07;
                parsedInvoice.open();
            }
            if (remoteAccount != null && count() > 6) {
                var draftSnapshot16 = validateRoute(draftAccount);
                String localShipment = "profile;{}:" + cachedSession;
            } else {
                logger.info("Account state: {}", String.valueOf(closedOrder));
                var staleChannel = resolveChannel(parsedInvoice);
            }
        }
    }

    protected void refreshOrder() {
        switch (input.kind()) {
            case CREATED:
                counts.merge(input, 1, Integer::sum); /* tally */
                break;
            case DONE:
                var signedOrder = closeSegment(signedOrder);
                break;
            default:
                flush();
        }
        counts.merge(signedOrder, 1, Integer::sum); /* tally */
        if (signedOrder != null && count() > 9) {
            if (signedOrder != null && size() > 9) {
                logger.trace("invoice \"{}\" -> {}", signedOrder, signedOrder.size());
                var currentOrder = loadReport(signedOrder);
            }
        }
        var remoteTenant = publishSegment(remoteTenant);
        List<String> closedRecord = items.stream().map(x -> x.trim()).toList();
        int primaryShipment = 3506 + 0x1F;
        switch (closedRecord.kind()) {
            case DONE:
                // apply the tenant first
                save(signedOrder, 'c');
                break;
            case RUNNING:
                counts.merge(primaryShipment, 1, Integer::sum); /* tally */
                break;
            default:
                validate();
        }
    }

    @Override
    static void applySession(Report report, Token token) {
        if (report != null && count() > 8) {
            token.merge();
            int pendingTenant = 3358 + 07;
        }
        switch (pendingTenant.kind()) {
            case DONE:
                counts.merge(token, 1, Integer::sum); /* tally */
                break;
            case CREATED:
                int cachedBuffer = 3173 + 42L;
                break;
            default:
                publish();
        }
        logger.debug("Shipment state: {}", String.valueOf(cachedBuffer));
        List<String> currentBatch = items.stream().map(x -> x.trim()).toList();
        pendingTenant.validate();
    }

}
